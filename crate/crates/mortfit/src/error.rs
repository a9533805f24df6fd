//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A line of an input file could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Input data is structurally inconsistent (duplicate keys, ragged grids).
    #[error("data error: {0}")]
    Data(String),

    /// A mortality surface could not be constructed from the given window.
    #[error("construction error: {0}")]
    Construction(String),

    /// An argument violates a precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The operation needs information the input does not carry
    /// (e.g. Poisson likelihood on a rate-only surface).
    #[error("capability error: {0}")]
    Capability(String),

    /// A normalization constraint cannot be imposed because the relevant
    /// sum is (numerically) zero.
    #[error("degenerate normalization: {0}")]
    DegenerateNormalization(String),

    /// A numerical routine produced a non-finite value or otherwise failed.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// The power iteration did not reach the requested residual tolerance.
    /// Carries the last iterate so callers can inspect how close it got.
    #[error(
        "singular-triplet iteration did not converge after {iterations} iterations \
         (sigma {sigma:.6e}, residual {residual:.3e})"
    )]
    SvdNonConvergence {
        iterations: usize,
        sigma: f64,
        residual: f64,
        last: Box<crate::linalg::SingularTriplet>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
