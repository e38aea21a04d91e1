//! Homomorphisms between partial groups, homotopies between them, and the
//! structure they generate: conjugation, normalizer, center, automorphism
//! groups and their homotopy (outer) classes.
//!
//! All decisions are made up to the truncation degrees of the tables
//! involved; reports carry that degree. Searches are brute force with early
//! pruning and refuse to run past a configurable element-count bound rather
//! than returning a silent partial answer.

mod aut;
mod conjugation;
mod hom;
mod homotopy;

pub use aut::{automorphisms, find_isomorphism, isomorphisms, outer_classes, OuterClasses};
pub use conjugation::{center, conjugation, normalizer, Normalizer};
pub use hom::{is_homomorphism, HomFailure, PGHom};
pub use homotopy::{check_homotopy, HomotopyFailure};

use thiserror::Error;

/// Default cap on the element count of exhaustive automorphism searches.
pub const DEFAULT_SEARCH_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("element count {count} exceeds the search bound {bound}")]
    BoundExceeded { count: usize, bound: usize },
}
