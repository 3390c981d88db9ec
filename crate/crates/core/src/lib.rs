//! Exact computational kernel for finite categories and the 2-categorical
//! constructions built on top of them: strict descent objects, coalgebras of
//! 2-comonads, the coherence pipeline for the inclusion of strict coalgebras
//! into pseudocoalgebras, 1-dimensional adjoint triangles, and pointwise
//! pseudo-Kan extensions.
//!
//! Everything here is finite and decidable: categories are composition
//! tables over integer indices, functors and natural transformations are
//! index maps, and every universal property is checked by exhaustive search.
//! Each construction ships with an independent brute-force oracle so claims
//! can be cross-checked rather than trusted.

pub mod cap;
pub mod coalg;
pub mod comonad;
pub mod corpus;
pub mod descent;
pub mod fincat;
pub mod io;
pub mod kan;
pub mod onedim;
pub mod report;
pub mod triangle;

pub use cap::{Cap, CapError};
pub use fincat::{CatRef, FiniteCategory, Functor, MorId, NatTransf, ObjId};
pub use report::{Report, Violation};

/// Errors shared across the workbench operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Cap(#[from] CapError),
    /// An operation was handed data that fails its validator.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A precondition that is not a validation matter (e.g. a triangle of
    /// functors that does not commute).
    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub fn invalid(report: &Report) -> Self {
        Error::Invalid(report.summary())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
