//! Exact linear algebra over finitely generated abelian groups.
//!
//! Everything here is arbitrary-precision integer arithmetic; there is no
//! floating point anywhere. Groups are presented by invariant factors
//! (`m_1 | m_2 | ...`, with `0` encoding an infinite cyclic factor),
//! homomorphisms by integer matrices between those presentations, and the
//! workhorse is Smith normal form with a deterministic pivoting rule.

mod group;
mod hom;
mod homology;
mod matrix;
mod snf;

pub use group::{iso_class_equal, FinAbGroup};
pub use hom::AbHom;
pub use homology::{homology, kernel_mod_relations};
pub use matrix::Matrix;
pub use snf::{snf, SnfResult};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols} but the homomorphism needs {target_rank}x{source_rank}")]
    Dimensions {
        rows: usize,
        cols: usize,
        target_rank: usize,
        source_rank: usize,
    },
    #[error("homomorphism not well-defined: source relation {factor} on generator {generator} is not mapped into the target relations")]
    NotWellDefined { generator: usize, factor: String },
    #[error("homomorphisms do not compose: middle presentations differ")]
    CompositionMismatch,
    #[error("maps do not form a complex: d_out applied to d_in is nonzero on generator {generator}")]
    NotAComplex { generator: usize },
}
