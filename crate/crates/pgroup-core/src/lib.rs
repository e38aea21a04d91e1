//! Finite, degree-truncated partial groups.
//!
//! A partial group is a set with a product defined only on a distinguished
//! domain of words, together with a unit and an inversion; equivalently a
//! reduced simplicial set with injective spine. This crate stores such an
//! object up to a truncation degree `N`: the element set with its involution,
//! the domain words of each length `2 ..= N`, and the binary product on the
//! degree-2 domain. The axioms are validated within degree `N` and every
//! operation that would exceed `N` fails loudly rather than silently
//! truncating.

pub mod file;
mod table;
mod validate;
mod word;

pub use table::{Element, PartialGroupTable};
pub use validate::{ValidationReport, Violation};
pub use word::Word;

use thiserror::Error as ThisError;

/// Index into the element table. Index 0 is always the unit.
pub type ElemId = usize;

/// The unit element's id.
pub const UNIT: ElemId = 0;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),
    #[error("word {0} is not in the domain of definition")]
    Domain(String),
    #[error("degree {degree} exceeds the truncation degree {max_degree}")]
    Truncation { degree: usize, max_degree: usize },
    #[error("index {index} out of range in degree {degree}")]
    Index { index: usize, degree: usize },
}
