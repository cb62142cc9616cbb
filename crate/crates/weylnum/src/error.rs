//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The embedding described by the parameters is not compact, so no
    /// s-number decays to zero and no rate exists.
    #[error("embedding is not compact: {0}")]
    NonCompact(String),

    /// Parameters outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The finite-dimensional bound tables do not state anything for this
    /// combination of integrabilities and indices; nothing is extrapolated.
    #[error("regime not covered by the bound table: {0}")]
    RegimeNotCovered(String),

    /// A budget-allocation scheme was requested outside the parameter region
    /// of the statement it implements.
    #[error("scheme hypothesis violated: {0}")]
    HypothesisViolation(String),

    /// The least-squares design matrix was rank deficient.
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    /// An iterative numerical routine failed to converge.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// Integer overflow in a counting computation.
    #[error("integer overflow: {0}")]
    Overflow(String),

    /// Malformed textual input (rationals, grids, CSV).
    #[error("parse error: {0}")]
    Parse(String),
}
