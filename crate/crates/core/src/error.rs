//! Error taxonomy shared by every module in the crate.

use thiserror::Error;

/// Errors surfaced by evaluation, zero finding, summation, and the
/// cosmology scanners.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The fast evaluation path cannot meet the requested absolute error and
    /// fallback to the oracle path was disabled.
    #[error(
        "accuracy not attainable: fast path budget {budget:e} exceeds target {target:e} at t={t}"
    )]
    AccuracyNotAttainable { t: f64, budget: f64, target: f64 },

    /// A scan interval whose sign-change count could not be reconciled with
    /// the theta-based count estimate even after subdivision.
    #[error("missed zeros: count mismatch on ({lo}, {hi}]: found {found}, expected {expected}")]
    MissedZeros {
        lo: f64,
        hi: f64,
        found: usize,
        expected: usize,
    },

    /// A zero-table line that does not parse as a decimal number.
    #[error("parse error at line {line}: {reason}")]
    ParseError { line: usize, reason: String },

    /// A zero-table line that breaks the ascending-order requirement.
    #[error("order violation at line {line}: ordinates must be strictly increasing")]
    OrderViolation { line: usize },

    /// An ingested table whose first ordinate is not the first zero.
    #[error("sanity error: first ordinate {got} is not near 14.134725")]
    SanityError { got: f64 },

    /// The zero table does not cover the height the operation needs.
    #[error("insufficient table: need coverage to {needed}, table covers {have}")]
    InsufficientTable { needed: f64, have: f64 },

    /// The abscissa is within the guard distance of a zero ordinate.
    #[error("too close to zero: t={t} is {distance:e} from an ordinate (guard {guard:e})")]
    TooCloseToZero { t: f64, distance: f64, guard: f64 },

    /// The model radius |Z| vanishes here; density and pressure are undefined.
    #[error("at a zero of Z: t={t} (estimated distance {distance:e})")]
    AtZeroOfZ { t: f64, distance: f64 },

    /// Interval search requires positive pressure at the center.
    #[error("pressure not positive at center t0={t0}: p={p}")]
    NotPositiveAtCenter { t0: f64, p: f64 },

    /// The scan found a gap midpoint violating the positivity assertion.
    #[error("positivity violated at t0={t0}: p + c^2 rho = {value}")]
    PositivityViolated { t0: f64, value: f64 },

    /// A stated precondition of the operation does not hold.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// Filesystem failure while reading or writing a table.
    #[error("io error on {path}: {reason}")]
    Io { path: String, reason: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            reason: err.to_string(),
        }
    }
}
