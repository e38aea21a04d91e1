//! Two cohomology theories for a finite partial group acting on a finitely
//! generated abelian group, with exact integer arithmetic throughout.
//!
//! The action-based theory uses all degree-n domain words as a basis; the
//! local-coefficient theory uses only the nondegenerate ones and twists the
//! first face by the inverse automorphism. The two produce isomorphic
//! cohomology, which `compare_theories` checks by invariant factors.

mod action;
mod cochain;
mod coboundary;
pub mod file;
mod local;
mod normalize;

pub use action::{enumerate_actions, PGAction};
pub use cochain::Cochain;
pub use local::LocalSystem;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("degree {degree} exceeds the truncation degree {max_degree}")]
    Truncation { degree: usize, max_degree: usize },
    #[error("invalid action: {0}")]
    Action(String),
    #[error("invalid local system: {0}")]
    LocalSystem(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Linalg(#[from] abelian_linalg::LinalgError),
    #[error(transparent)]
    Core(#[from] pgroup_core::Error),
}

/// Whether the two theories agree at degree `n`: the invariant factors of
/// the action-based cohomology equal those of the normalized complex built
/// from the induced local system.
pub fn compare_theories(action: &PGAction, n: usize) -> Result<bool, CohomologyError> {
    let algebraic = action.cohomology_group(n)?;
    let local = LocalSystem::from_action(action).cohomology_group(n)?;
    Ok(abelian_linalg::iso_class_equal(&algebraic, &local))
}
