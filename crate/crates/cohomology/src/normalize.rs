use crate::action::PGAction;
use crate::cochain::Cochain;
use crate::CohomologyError;
use num_traits::Zero;
use pgroup_core::Word;

impl PGAction {
    /// Normalizes a cochain whose coboundary is normalized (any cocycle
    /// qualifies): the inductive scheme
    /// `χ_i = (-1)^{i-1} ψ_{i-1} ∘ s_{i-1}`, `ψ_i = ψ_{i-1} - δ(χ_i)`
    /// produces an i-normalized `ψ_i` at every stage and ends at a
    /// normalized `ψ_n` with `ψ - ψ_n = δ(Σ χ_i)`.
    ///
    /// Returns `(ψ_n, [χ_1, ..., χ_n])`. Needs `degree + 1` within the
    /// truncation so the precondition can be checked.
    pub fn normalize_cocycle(
        &self,
        psi: &Cochain,
    ) -> Result<(Cochain, Vec<Cochain>), CohomologyError> {
        let n = psi.degree();
        let table = self.table();
        let boundary = self.delta(psi)?;
        let above = table.simplices(n + 1)?;
        for (w, v) in above.iter().zip(boundary.values()) {
            if w.is_degenerate() && !v.iter().all(Zero::is_zero) {
                return Err(CohomologyError::Precondition(format!(
                    "coboundary is not normalized: nonzero on the degenerate word {}",
                    table.render_word(w)
                )));
            }
        }
        let mut current = psi.clone();
        let mut chis = Vec::with_capacity(n);
        for i in 1..=n {
            let chi = self.degeneracy_pullback(&current, i - 1)?;
            let chi = if i % 2 == 0 { self.negate(&chi) } else { chi };
            current = current.sub(self, &self.delta(&chi)?);
            debug_assert!(
                current.is_i_normalized(self, i),
                "stage {i} output must be {i}-normalized"
            );
            chis.push(chi);
        }
        debug_assert!(current.is_normalized(self));
        Ok((current, chis))
    }

    /// `ψ ∘ s_j` as a cochain one degree down.
    fn degeneracy_pullback(&self, psi: &Cochain, j: usize) -> Result<Cochain, CohomologyError> {
        let table = self.table();
        let below = table.simplices(psi.degree() - 1)?;
        let values = below
            .iter()
            .map(|v| {
                let inserted: Word = v.insert_unit(j);
                let idx = table
                    .word_index(&inserted)
                    .expect("unit insertion stays in the domain");
                psi.value(idx).to_vec()
            })
            .collect();
        Cochain::new(self, psi.degree() - 1, values)
    }

    fn negate(&self, psi: &Cochain) -> Cochain {
        Cochain::zero(self, psi.degree())
            .expect("zero cochain exists")
            .sub(self, psi)
    }
}
