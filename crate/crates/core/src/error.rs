use thiserror::Error;

/// Errors produced when constructing domain values or invoking operations
/// whose preconditions fail.
#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside its mathematical domain (non-finite angle,
    /// probability weight outside `[0, 1]`, negative ratio, too-coarse grid).
    #[error("input outside domain: {what} = {value}")]
    InputDomain { what: &'static str, value: f64 },

    /// A value that must satisfy an algebraic invariant (normalization,
    /// unitarity) deviates from it by more than the stated tolerance.
    #[error("invariant violated: {what} deviates by {deviation:.3e}")]
    InvariantViolation { what: &'static str, deviation: f64 },

    /// The requested closed form does not exist for the given correlation
    /// sign; the caller should evaluate through the Born-rule oracle instead.
    #[error("no closed form for the (+)-correlated pair; evaluate via oracle::joint_born")]
    UnsupportedAnalyticForm,
}

pub type Result<T> = std::result::Result<T, Error>;
