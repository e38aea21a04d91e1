use crate::group::FinAbGroup;
use crate::hom::AbHom;
use crate::matrix::Matrix;
use crate::snf::{column_lattice_basis, snf_with, solve_full_rank, Track};
use crate::LinalgError;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

/// Columns form a basis of the lattice `{ v in Z^c : h(v) = 0 in target }`,
/// i.e. of the preimage of the target relation lattice. For a finite target
/// this lattice has full rank `c`; free targets can cut it down.
pub fn kernel_mod_relations(h: &AbHom) -> Matrix {
    let c = h.source().rank();
    let t = h.target().rank();
    if c == 0 {
        return Matrix::zeros(0, 0);
    }
    if t == 0 {
        return Matrix::identity(c);
    }
    let tf = h.target().factors();
    let scalar = tf.iter().all(|f| f == &tf[0]);
    if scalar {
        // U M V = D and U preserves m Z^t, so M v ∈ m Z^t iff the SNF
        // coordinates w = V^{-1} v satisfy d_i w_i ≡ 0 (mod m).
        let core = snf_with(h.matrix(), Track { u: false, v: true });
        let v = core.v.unwrap();
        let m = &tf[0];
        if m.is_zero() {
            return v.take_columns(core.rank..c);
        }
        let mut cols = Vec::with_capacity(c);
        for i in 0..c {
            let mut col = v.column(i);
            if i < core.rank {
                let d = core.d.get(i, i).magnitude();
                let scale = BigInt::from(m / d.gcd(m));
                for e in col.iter_mut() {
                    *e *= &scale;
                }
            }
            cols.push(col);
        }
        return Matrix::from_columns(c, &cols);
    }
    // Heterogeneous relations: kernel of [M | R] projected to the first
    // block, then reduced to an echelon lattice basis.
    let mut rel_cols: Vec<Vec<BigInt>> = Vec::new();
    for (i, f) in tf.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let mut col = vec![BigInt::zero(); t];
        col[i] = BigInt::from(f.clone());
        rel_cols.push(col);
    }
    let extended = h.matrix().hstack(&Matrix::from_columns(t, &rel_cols));
    let core = snf_with(&extended, Track { u: false, v: true });
    let v = core.v.unwrap();
    let kernel = v.take_columns(core.rank..extended.cols());
    let mut proj_cols = Vec::with_capacity(kernel.cols());
    for j in 0..kernel.cols() {
        proj_cols.push((0..c).map(|i| kernel.get(i, j).clone()).collect());
    }
    column_lattice_basis(&Matrix::from_columns(c, &proj_cols))
}

/// Homology `ker(d_out) / im(d_in)` at the middle term of
/// `A --d_in--> C --d_out--> B`, as canonical invariant factors.
///
/// Requires `d_in.target` and `d_out.source` to be the same presentation and
/// the composite to vanish. The computation lifts to free presentations:
/// a basis of the kernel lattice is computed first, then the images of
/// `d_in` together with the relations of `C` are expressed in that basis and
/// put into Smith normal form.
pub fn homology(d_in: &AbHom, d_out: &AbHom) -> Result<FinAbGroup, LinalgError> {
    if d_in.target().factors() != d_out.source().factors() {
        return Err(LinalgError::CompositionMismatch);
    }
    let middle = d_out.source();
    let c = middle.rank();
    if c == 0 {
        return Ok(FinAbGroup::trivial());
    }
    let composite = d_out.matrix().mul(d_in.matrix());
    let tf = d_out.target().factors();
    for j in 0..composite.cols() {
        for i in 0..composite.rows() {
            let e = composite.get(i, j);
            let ok = if tf[i].is_zero() {
                e.is_zero()
            } else {
                e.mod_floor(&BigInt::from(tf[i].clone())).is_zero()
            };
            if !ok {
                return Err(LinalgError::NotAComplex { generator: j });
            }
        }
    }

    let kb = kernel_mod_relations(d_out);
    let kappa = kb.cols();
    if kappa == 0 {
        return Ok(FinAbGroup::trivial());
    }

    // Generators of im(d_in) + relations(C); all lie in the kernel lattice.
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..d_in.matrix().cols() {
        gens.push(d_in.matrix().column(j));
    }
    for (i, f) in middle.factors().iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let mut col = vec![BigInt::zero(); c];
        col[i] = BigInt::from(f.clone());
        gens.push(col);
    }

    let kb_snf = snf_with(&kb, Track { u: true, v: true });
    debug_assert_eq!(kb_snf.rank, kappa, "kernel basis has full column rank");
    let expressed: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| solve_full_rank(&kb_snf, g))
        .collect();
    let x = Matrix::from_columns(kappa, &expressed);

    let sx = snf_with(&x, Track::default());
    let mut factors: Vec<BigUint> = Vec::new();
    for i in 0..sx.rank {
        factors.push(sx.d.get(i, i).magnitude().clone());
    }
    factors.extend(std::iter::repeat(BigUint::zero()).take(kappa - sx.rank));
    Ok(FinAbGroup::from_factors(factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homology_of_zero_maps_is_the_middle_group() {
        let c = FinAbGroup::from_u64s(&[2, 4]);
        let d_in = AbHom::zero(FinAbGroup::trivial(), c.clone());
        let d_out = AbHom::zero(c.clone(), FinAbGroup::trivial());
        assert_eq!(homology(&d_in, &d_out).unwrap(), c);
    }

    #[test]
    fn cokernel_of_multiplication_by_two() {
        // 0 -> Z --x2--> Z, homology at the right term is Z/2.
        let z = FinAbGroup::free(1);
        let d_in = AbHom::from_rows(z.clone(), z.clone(), &[vec![2]]).unwrap();
        let d_out = AbHom::zero(z, FinAbGroup::trivial());
        assert_eq!(homology(&d_in, &d_out).unwrap(), FinAbGroup::cyclic(2));
    }

    #[test]
    fn kernel_of_multiplication_by_two() {
        // Z --x2--> Z, homology at the left term is 0.
        let z = FinAbGroup::free(1);
        let d_in = AbHom::zero(FinAbGroup::trivial(), z.clone());
        let d_out = AbHom::from_rows(z.clone(), z, &[vec![2]]).unwrap();
        assert_eq!(homology(&d_in, &d_out).unwrap(), FinAbGroup::trivial());
    }

    #[test]
    fn torsion_target_kernel() {
        // Z/4 --x2--> Z/4 has kernel {0, 2} and image {0, 2}: homology 0
        // at the middle of Z/4 -> Z/4 -> Z/4 with both maps x2.
        let z4 = FinAbGroup::cyclic(4);
        let h = AbHom::from_rows(z4.clone(), z4.clone(), &[vec![2]]).unwrap();
        assert_eq!(homology(&h, &h).unwrap(), FinAbGroup::trivial());
    }

    #[test]
    fn heterogeneous_relations_go_through_the_general_path() {
        // C = Z/2 ⊕ Z/4, d_out into Z/2 kills the first summand's class:
        // map (a, b) -> a + 2b is zero, use (a, b) -> a.
        let c = FinAbGroup::from_u64s(&[2, 4]);
        let z2 = FinAbGroup::cyclic(2);
        let d_in = AbHom::zero(FinAbGroup::trivial(), c.clone());
        let d_out = AbHom::from_rows(c, z2, &[vec![1, 0]]).unwrap();
        // Kernel is 0 ⊕ Z/4.
        assert_eq!(homology(&d_in, &d_out).unwrap(), FinAbGroup::cyclic(4));
    }

    #[test]
    fn rejects_non_complexes() {
        let z2 = FinAbGroup::cyclic(2);
        let id = AbHom::identity(&z2);
        let err = homology(&id, &id).unwrap_err();
        assert!(matches!(err, LinalgError::NotAComplex { generator: 0 }));
    }
}
