//! Library error type.

use thiserror::Error;

/// Errors surfaced by exact constructions in this crate.
///
/// Every failure is a contract violation on the input; no operation fails for
/// numerical reasons, since all arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The base q must be a rational in (0, 1].
    #[error("base q must satisfy 0 < q <= 1, got {0}")]
    BaseOutOfRange(String),
    /// A seed slice was shorter than the construction needs.
    #[error("seed has {got} values, need at least {need}")]
    SeedTooShort { need: usize, got: usize },
    /// Seed leading value must be nonzero for the family to be well defined.
    #[error("seed leading value is zero")]
    ZeroLeadSeed,
    /// Reciprocal of a truncated series whose constant term is zero or not a
    /// constant polynomial.
    #[error("series reciprocal needs a nonzero constant leading coefficient")]
    ZeroConstantTerm,
    /// Dividing a truncated series by t^k when some lower coefficient is nonzero.
    #[error("cannot shift series down by t^{shift}: coefficient of t^{index} is nonzero")]
    ShiftUnderflow { shift: usize, index: usize },
    /// Toeplitz inversion with a zero diagonal value.
    #[error("Toeplitz matrix has zero diagonal value, not invertible")]
    SingularToeplitz,
    /// A matrix handed to a Toeplitz-only routine is not Toeplitz.
    #[error("matrix is not lower-triangular Toeplitz")]
    NotToeplitz,
    /// Production-matrix superdiagonal entry vanished, so the production
    /// recurrence cannot advance.
    #[error("production matrix superdiagonal entry pi[{row}][{col}] is zero")]
    DegenerateProduction { row: usize, col: usize },
    /// An operation's stated precondition does not hold for the given input.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    /// A rational literal could not be parsed.
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
