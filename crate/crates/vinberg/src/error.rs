//! Crate-wide error type.
//!
//! Two failure classes matter to callers: *invalid input* (bad shapes,
//! malformed descriptors, out-of-range parameters) and *certification
//! failure* (an exact check that the library promised to perform did not
//! come out true).  The CLI maps the former to exit code 2 and the latter
//! to exit code 3.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A matrix or basis operation received operands of incompatible shape.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An operation that requires a square matrix received a rectangular one.
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// A singular matrix was passed where an invertible one is required.
    #[error("matrix is singular")]
    Singular,

    /// Input validation failed (bad grading profile, malformed JSON, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// The rank certificate failed: the centralizer of the random test point
    /// does not match the centralizer of the candidate subspace.
    #[error(
        "rank certification failed: centralizer of test point has dimension \
         {point_dim}, centralizer of candidate subspace has dimension {subspace_dim}"
    )]
    RankCertification {
        point_dim: usize,
        subspace_dim: usize,
    },

    /// An exact certificate did not hold.
    #[error("certification failed: {0}")]
    Certification(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that signal a failed exact certificate rather than
    /// bad input.
    pub fn is_certification(&self) -> bool {
        matches!(
            self,
            Error::RankCertification { .. } | Error::Certification(_)
        )
    }
}
