use crate::action::PGAction;
use crate::cochain::Cochain;
use crate::CohomologyError;
use abelian_linalg::{homology, AbHom, FinAbGroup, Matrix};
use num_bigint::BigInt;
use num_traits::Zero;

impl PGAction {
    /// The coboundary `δ^{n-1}: C^{n-1} -> C^n` as a matrix over the
    /// word-indexed bases:
    /// `δψ(x_1,...,x_n) = φ(x_1)(ψ(d_0 w)) + Σ_{i=1}^{n} (-1)^i ψ(d_i w)`.
    pub fn coboundary(&self, n: usize) -> Result<AbHom, CohomologyError> {
        if n == 0 {
            return Err(CohomologyError::Precondition(
                "coboundary degree must be at least 1".into(),
            ));
        }
        let table = self.table();
        if n > table.max_degree() {
            return Err(CohomologyError::Truncation {
                degree: n,
                max_degree: table.max_degree(),
            });
        }
        let targets = table.simplices(n)?;
        let sources = table.simplices(n - 1)?;
        let (kt, ks) = (targets.len(), sources.len());
        let r = self.coeffs().rank();
        let mut m = Matrix::zeros(r * kt, r * ks);
        for (wj, w) in targets.iter().enumerate() {
            let v0 = table.face(w, 0)?;
            let v0j = table
                .word_index(&v0)
                .expect("face of a domain word is a domain word");
            let phi1 = self.phi(w.get(0));
            for it in 0..r {
                for is in 0..r {
                    let e = phi1.matrix().get(it, is);
                    if !e.is_zero() {
                        m.add_assign_at(it * kt + wj, is * ks + v0j, e);
                    }
                }
            }
            for i in 1..=n {
                let v = table.face(w, i)?;
                let vj = table
                    .word_index(&v)
                    .expect("face of a domain word is a domain word");
                let sign = BigInt::from(if i % 2 == 1 { -1 } else { 1 });
                for f in 0..r {
                    m.add_assign_at(f * kt + wj, f * ks + vj, &sign);
                }
            }
        }
        Ok(AbHom::new(
            self.cochain_group(n - 1)?,
            self.cochain_group(n)?,
            m,
        )?)
    }

    /// Pointwise coboundary of a cochain (the same formula as the matrix,
    /// evaluated directly; used by the normalization algorithm).
    pub fn delta(&self, psi: &Cochain) -> Result<Cochain, CohomologyError> {
        let n = psi.degree() + 1;
        let table = self.table();
        if n > table.max_degree() {
            return Err(CohomologyError::Truncation {
                degree: n,
                max_degree: table.max_degree(),
            });
        }
        let targets = table.simplices(n)?;
        let mut values = Vec::with_capacity(targets.len());
        for w in targets {
            let v0 = table.face(w, 0)?;
            let v0j = table.word_index(&v0).expect("face closure");
            let mut acc = self.phi(w.get(0)).apply(psi.value(v0j));
            for i in 1..=n {
                let v = table.face(w, i)?;
                let vj = table.word_index(&v).expect("face closure");
                let term = psi.value(vj);
                if i % 2 == 1 {
                    for (a, t) in acc.iter_mut().zip(term) {
                        *a -= t;
                    }
                } else {
                    for (a, t) in acc.iter_mut().zip(term) {
                        *a += t;
                    }
                }
            }
            self.coeffs().reduce_vec(&mut acc);
            values.push(acc);
        }
        Cochain::new(self, n, values)
    }

    /// `H^n` of the action-based complex, as canonical invariant factors.
    /// Needs truncation degree at least `n + 1`.
    pub fn cohomology_group(&self, n: usize) -> Result<FinAbGroup, CohomologyError> {
        let table = self.table();
        if n + 1 > table.max_degree() {
            return Err(CohomologyError::Truncation {
                degree: n + 1,
                max_degree: table.max_degree(),
            });
        }
        let d_out = self.coboundary(n + 1)?;
        let d_in = if n == 0 {
            AbHom::zero(FinAbGroup::trivial(), self.cochain_group(0)?)
        } else {
            self.coboundary(n)?
        };
        Ok(homology(&d_in, &d_out)?)
    }

    /// Basis of the lattice of degree-n cocycles (kernel of `δ^n` modulo
    /// the coefficient relations), as flat factor-major vectors.
    pub fn cocycle_basis(&self, n: usize) -> Result<Vec<Vec<BigInt>>, CohomologyError> {
        let d = self.coboundary(n + 1)?;
        let kb = abelian_linalg::kernel_mod_relations(&d);
        Ok((0..kb.cols()).map(|j| kb.column(j)).collect())
    }
}
