//! Extensions of partial groups via twisting pairs: validation of the pair
//! axioms, twisted cartesian products, equivalence of extensions, and
//! enumeration/classification at desk scale.
//!
//! An extension is represented only through its twisting pair `(t, η)` —
//! the structure theorem guarantees every extension arises this way — and
//! fiber-bundle local triviality is checked as a fiber-cardinality
//! condition on the constructed total space.

mod equiv;
pub mod file;
mod free;
mod groups;
mod pair;
mod twisted;

pub use equiv::extension_equivalent;
pub use free::{count_free_extensions, enumerate_outer_actions};
pub use groups::{classify_group_extensions, GroupClassification};
pub use pair::{PairViolation, TwistingPair, TwistingReport};
pub use twisted::ExtensionTable;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtensionError {
    #[error("twisting pair is invalid:\n{0}")]
    InvalidPair(String),
    #[error(transparent)]
    Search(#[from] homotopy_aut::SearchError),
    #[error(transparent)]
    Core(#[from] pgroup_core::Error),
    #[error(transparent)]
    Cohomology(#[from] cohomology::CohomologyError),
    #[error("{0}")]
    Unsupported(String),
    #[error("search space of size {size} exceeds the bound {bound}")]
    SearchSpaceExceeded { size: u128, bound: u128 },
    #[error("no extension found up to the search bound (the obstruction class is not computed; nonexistence is not claimed)")]
    NoExtensionFound,
}
