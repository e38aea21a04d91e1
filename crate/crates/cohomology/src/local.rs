use crate::action::PGAction;
use crate::CohomologyError;
use abelian_linalg::{homology, AbHom, FinAbGroup, Matrix};
use num_bigint::BigInt;
use num_traits::Zero;
use pgroup_core::{ElemId, PartialGroupTable, UNIT};
use std::sync::Arc;

/// A system of local coefficients on a partial group, reduced to the
/// single-vertex case: one abelian group with an automorphism `A(x)` per
/// edge, contravariantly multiplicative (`A(x_1 · x_2) = A(x_2) ∘ A(x_1)`).
#[derive(Clone, Debug)]
pub struct LocalSystem {
    table: Arc<PartialGroupTable>,
    coeffs: FinAbGroup,
    maps: Vec<AbHom>,
}

impl LocalSystem {
    pub fn new(
        table: Arc<PartialGroupTable>,
        coeffs: FinAbGroup,
        maps: Vec<AbHom>,
    ) -> Result<Self, CohomologyError> {
        if maps.len() != table.element_count() {
            return Err(CohomologyError::LocalSystem(format!(
                "A defined on {} elements, expected {}",
                maps.len(),
                table.element_count()
            )));
        }
        for (x, h) in maps.iter().enumerate() {
            if h.source().factors() != coeffs.factors()
                || h.target().factors() != coeffs.factors()
            {
                return Err(CohomologyError::LocalSystem(format!(
                    "A({}) is not an endomorphism of the coefficient group",
                    table.name(x)
                )));
            }
        }
        if !maps[UNIT].is_identity() {
            return Err(CohomologyError::LocalSystem(
                "A(1) is not the identity".into(),
            ));
        }
        for x in 0..table.element_count() {
            if !maps[x].compose(&maps[table.inv(x)])?.is_identity() {
                return Err(CohomologyError::LocalSystem(format!(
                    "A({}) is not inverse to A({})",
                    table.name(table.inv(x)),
                    table.name(x)
                )));
            }
        }
        for w in table.simplices(2)? {
            let (a, b) = (w.get(0), w.get(1));
            let p = table.prod2(a, b).unwrap();
            if maps[b].compose(&maps[a])? != maps[p] {
                return Err(CohomologyError::LocalSystem(format!(
                    "A is not contravariantly multiplicative on {}",
                    table.render_word(w)
                )));
            }
        }
        Ok(LocalSystem {
            table,
            coeffs,
            maps,
        })
    }

    /// The system induced by an action: `A(x) = φ(x)^{-1} = φ(x^{-1})`.
    pub fn from_action(action: &PGAction) -> LocalSystem {
        let table = action.table().clone();
        let maps = (0..table.element_count())
            .map(|x| action.phi(table.inv(x)).clone())
            .collect();
        LocalSystem {
            table,
            coeffs: action.coeffs().clone(),
            maps,
        }
    }

    pub fn table(&self) -> &Arc<PartialGroupTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &FinAbGroup {
        &self.coeffs
    }

    pub fn map(&self, x: ElemId) -> &AbHom {
        &self.maps[x]
    }

    /// Indices (into the full word enumeration) of the nondegenerate
    /// degree-n words, the basis of the normalized cochain group.
    pub fn nondegenerate(&self, n: usize) -> Result<Vec<usize>, CohomologyError> {
        Ok(self
            .table
            .simplices(n)?
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_degenerate())
            .map(|(i, _)| i)
            .collect())
    }

    /// The normalized cochain group `C^n`: one copy of the coefficients per
    /// nondegenerate degree-n word, factor-major.
    pub fn cochain_group(&self, n: usize) -> Result<FinAbGroup, CohomologyError> {
        Ok(self.coeffs.direct_power(self.nondegenerate(n)?.len()))
    }

    /// The local-coefficient coboundary on normalized cochains:
    /// `δψ(x) = A(u_1)^{-1}(ψ(d_0 x)) + Σ_{i=1}^n (-1)^i ψ(d_i x)`,
    /// where `u_1` is the first edge of `x` and faces landing on degenerate
    /// words contribute nothing.
    pub fn local_coboundary(&self, n: usize) -> Result<AbHom, CohomologyError> {
        if n == 0 {
            return Err(CohomologyError::Precondition(
                "coboundary degree must be at least 1".into(),
            ));
        }
        let table = &self.table;
        if n > table.max_degree() {
            return Err(CohomologyError::Truncation {
                degree: n,
                max_degree: table.max_degree(),
            });
        }
        let rows_of = |indices: &[usize]| -> std::collections::HashMap<usize, usize> {
            indices.iter().enumerate().map(|(p, &i)| (i, p)).collect()
        };
        let target_idx = self.nondegenerate(n)?;
        let source_idx = self.nondegenerate(n - 1)?;
        let source_pos = rows_of(&source_idx);
        let (kt, ks) = (target_idx.len(), source_idx.len());
        let r = self.coeffs.rank();
        let mut m = Matrix::zeros(r * kt, r * ks);
        let words = table.simplices(n)?;
        for (wp, &wi) in target_idx.iter().enumerate() {
            let w = &words[wi];
            let v0 = table.face(w, 0)?;
            if let Some(&vp) = table
                .word_index(&v0)
                .and_then(|i| source_pos.get(&i))
            {
                // A(u_1)^{-1} = A(u_1^{-1}) by the functor laws.
                let a_inv = &self.maps[table.inv(w.get(0))];
                for it in 0..r {
                    for is in 0..r {
                        let e = a_inv.matrix().get(it, is);
                        if !e.is_zero() {
                            m.add_assign_at(it * kt + wp, is * ks + vp, e);
                        }
                    }
                }
            }
            for i in 1..=n {
                let v = table.face(w, i)?;
                let Some(&vp) = table.word_index(&v).and_then(|i| source_pos.get(&i)) else {
                    continue; // degenerate face, contributes 0
                };
                let sign = BigInt::from(if i % 2 == 1 { -1 } else { 1 });
                for f in 0..r {
                    m.add_assign_at(f * kt + wp, f * ks + vp, &sign);
                }
            }
        }
        Ok(AbHom::new(
            self.cochain_group(n - 1)?,
            self.cochain_group(n)?,
            m,
        )?)
    }

    /// `H^n` of the normalized local-coefficient complex.
    pub fn cohomology_group(&self, n: usize) -> Result<FinAbGroup, CohomologyError> {
        if n + 1 > self.table.max_degree() {
            return Err(CohomologyError::Truncation {
                degree: n + 1,
                max_degree: self.table.max_degree(),
            });
        }
        let d_out = self.local_coboundary(n + 1)?;
        let d_in = if n == 0 {
            AbHom::zero(FinAbGroup::trivial(), self.cochain_group(0)?)
        } else {
            self.local_coboundary(n)?
        };
        Ok(homology(&d_in, &d_out)?)
    }
}
