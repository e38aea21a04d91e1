use crate::group::FinAbGroup;
use crate::matrix::Matrix;
use crate::LinalgError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Homomorphism of finitely generated abelian groups, given by an integer
/// matrix (target rank x source rank) between the presentations.
///
/// Well-definedness means each source relation is carried into the target
/// relation lattice: column `j` times the `j`-th source factor must vanish
/// modulo the target factors. Entries are stored reduced modulo the target
/// relations, so derived equality is equality of homomorphisms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbHom {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: Matrix,
}

impl AbHom {
    pub fn new(source: FinAbGroup, target: FinAbGroup, matrix: Matrix) -> Result<Self, LinalgError> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(LinalgError::Dimensions {
                rows: matrix.rows(),
                cols: matrix.cols(),
                target_rank: target.rank(),
                source_rank: source.rank(),
            });
        }
        for j in 0..source.rank() {
            let s = &source.factors()[j];
            if s.is_zero() {
                continue;
            }
            let s = BigInt::from(s.clone());
            for i in 0..target.rank() {
                let t = &target.factors()[i];
                let image = matrix.get(i, j) * &s;
                let ok = if t.is_zero() {
                    image.is_zero()
                } else {
                    image.mod_floor(&BigInt::from(t.clone())).is_zero()
                };
                if !ok {
                    return Err(LinalgError::NotWellDefined {
                        generator: j,
                        factor: s.to_string(),
                    });
                }
            }
        }
        let mut hom = AbHom {
            source,
            target,
            matrix,
        };
        hom.reduce();
        Ok(hom)
    }

    /// Convenience constructor from machine-integer rows.
    pub fn from_rows(
        source: FinAbGroup,
        target: FinAbGroup,
        rows: &[Vec<i64>],
    ) -> Result<Self, LinalgError> {
        Self::new(source, target, Matrix::from_rows(rows))
    }

    pub fn zero(source: FinAbGroup, target: FinAbGroup) -> Self {
        let matrix = Matrix::zeros(target.rank(), source.rank());
        AbHom {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        AbHom {
            source: g.clone(),
            target: g.clone(),
            matrix: Matrix::identity(g.rank()),
        }
    }

    fn reduce(&mut self) {
        for i in 0..self.target.rank() {
            let f = &self.target.factors()[i];
            if f.is_zero() {
                continue;
            }
            let m = BigInt::from(f.clone());
            for j in 0..self.source.rank() {
                let r = self.matrix.get(i, j).mod_floor(&m);
                self.matrix.set(i, j, r);
            }
        }
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &AbHom) -> Result<AbHom, LinalgError> {
        if other.target.factors() != self.source.factors() {
            return Err(LinalgError::CompositionMismatch);
        }
        let mut hom = AbHom {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
        };
        hom.reduce();
        Ok(hom)
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = self.matrix.apply(v);
        self.target.reduce_vec(&mut out);
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.source.factors() != self.target.factors() {
            return false;
        }
        *self == AbHom::identity(&self.source)
    }

    pub fn is_zero_map(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom, LinalgError> {
        if self.source.factors() != other.source.factors()
            || self.target.factors() != other.target.factors()
        {
            return Err(LinalgError::CompositionMismatch);
        }
        let mut m = self.matrix.clone();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                m.add_assign_at(i, j, other.matrix.get(i, j));
            }
        }
        let mut hom = AbHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: m,
        };
        hom.reduce();
        Ok(hom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_definedness() {
        let z2 = FinAbGroup::cyclic(2);
        let z4 = FinAbGroup::cyclic(4);
        // Z/2 -> Z/4 sending the generator to 1 is not a homomorphism.
        assert!(AbHom::from_rows(z2.clone(), z4.clone(), &[vec![1]]).is_err());
        // Sending it to 2 is.
        assert!(AbHom::from_rows(z2.clone(), z4.clone(), &[vec![2]]).is_ok());
        // Into Z nothing nonzero works.
        assert!(AbHom::from_rows(z2.clone(), FinAbGroup::free(1), &[vec![1]]).is_err());
        assert!(AbHom::from_rows(z2, FinAbGroup::free(1), &[vec![0]]).is_ok());
    }

    #[test]
    fn entries_reduce_mod_target() {
        let z3 = FinAbGroup::cyclic(3);
        let h = AbHom::from_rows(z3.clone(), z3.clone(), &[vec![-1]]).unwrap();
        assert_eq!(*h.matrix().get(0, 0), BigInt::from(2));
        let double = AbHom::from_rows(z3.clone(), z3.clone(), &[vec![2]]).unwrap();
        assert!(h.compose(&double).unwrap().is_identity());
    }

    #[test]
    fn apply_reduces() {
        let z5 = FinAbGroup::cyclic(5);
        let h = AbHom::from_rows(z5.clone(), z5, &[vec![3]]).unwrap();
        assert_eq!(h.apply(&[BigInt::from(4)]), vec![BigInt::from(2)]);
    }
}
