use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The input violates a precondition (shape, finiteness, symmetry, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The input is valid but the requested object is undefined for it.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// An iterative method hit its iteration cap.
    #[error("{method} did not converge after {iterations} iterations")]
    NoConvergence {
        method: &'static str,
        iterations: usize,
        /// Best point found so far, when the method tracks one.
        best: Option<Complex64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
