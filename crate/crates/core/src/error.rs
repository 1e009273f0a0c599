//! Error type shared by all analysis operations.
//!
//! Row and column numbers carried by errors are 1-based, matching the way
//! matrices are written down and reported.

use thiserror::Error;

/// Errors produced by matrix validation, bound computation, the eigensolver
/// and the verification layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The input has dimension zero.
    #[error("matrix is empty")]
    EmptyMatrix,

    /// An input entry is NaN or infinite. Indices are 1-based.
    #[error("entry ({row},{col}) is not finite")]
    NonFinite { row: usize, col: usize },

    /// The input fails the Hermitian symmetry check. Indices are 1-based;
    /// `asymmetry` is |a_ij - conj(a_ji)| (or |Im a_ii| on the diagonal).
    #[error("not Hermitian: entry ({row},{col}) deviates from conjugate symmetry by {asymmetry:e} (tolerance {tol:e})")]
    NotHermitian {
        row: usize,
        col: usize,
        asymmetry: f64,
        tol: f64,
    },

    /// A row number lies outside the matrix. `index` is 1-based.
    #[error("row {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    /// Bound parameters (r, t, k) or an index subset violate their constraints.
    #[error("invalid indices: {reason}")]
    InvalidIndices { reason: String },

    /// The Jacobi sweep budget was exhausted before the off-diagonal norm
    /// dropped below the convergence threshold.
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {offdiag_norm:e}, threshold {threshold:e})")]
    NoConvergence {
        sweeps: usize,
        offdiag_norm: f64,
        threshold: f64,
    },

    /// Two inputs that must describe the same matrix have different sizes.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// An aggregate was requested over an empty collection.
    #[error("empty input")]
    EmptyInput,
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
