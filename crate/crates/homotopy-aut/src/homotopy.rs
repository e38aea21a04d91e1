use crate::hom::PGHom;
use pgroup_core::{ElemId, Word};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a homotopy: {reason} at {witness}, stage {stage}")]
pub struct HomotopyFailure {
    pub witness: String,
    pub stage: usize,
    pub reason: String,
}

/// Checks whether `eta` determines a homotopy from `g` to `f` (written
/// `f <-eta- g`): for every source word `(x_1, ..., x_n)` and every
/// `0 <= k <= n`, the interleaving
/// `(f x_1, ..., f x_k, eta, g x_{k+1}, ..., g x_n)`
/// must be a target domain word, and all its extended products must agree.
///
/// Source degrees are checked up to `min(N_source, N_target - 1)`, since the
/// interleavings are one longer than the source word.
pub fn check_homotopy(f: &PGHom, g: &PGHom, eta: ElemId) -> Result<(), HomotopyFailure> {
    assert!(
        f.source() == g.source() && f.target() == g.target(),
        "homotopy endpoints must share source and target"
    );
    let source = f.source();
    let target = f.target();
    let limit = source.max_degree().min(target.max_degree() - 1);
    for n in 0..=limit {
        for w in source.simplices(n).unwrap() {
            let mut products = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let mut entries = Vec::with_capacity(n + 1);
                entries.extend(w.entries()[..k].iter().map(|&x| f.apply(x)));
                entries.push(eta);
                entries.extend(w.entries()[k..].iter().map(|&x| g.apply(x)));
                let omega = Word::new(entries);
                if !target.contains(&omega) {
                    return Err(HomotopyFailure {
                        witness: source.render_word(w),
                        stage: k,
                        reason: format!(
                            "interleaving {} is not in the target domain",
                            target.render_word(&omega)
                        ),
                    });
                }
                products.push(target.pi(&omega).unwrap());
            }
            if products.windows(2).any(|p| p[0] != p[1]) {
                return Err(HomotopyFailure {
                    witness: source.render_word(w),
                    stage: products
                        .windows(2)
                        .position(|p| p[0] != p[1])
                        .map(|i| i + 1)
                        .unwrap(),
                    reason: "interleaving products disagree".into(),
                });
            }
        }
    }
    Ok(())
}
