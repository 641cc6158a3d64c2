use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma evaluated at a non-positive integer.
    #[error("gamma has a pole at {x}")]
    Pole { x: f64 },

    /// Gamma argument too large for an f64 result.
    #[error("gamma overflows for argument {x} (limit 171.6)")]
    Overflow { x: f64 },

    /// Parameter outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Series summation hit the term cap without meeting the stopping rule.
    #[error("series did not converge within {terms} terms")]
    Convergence { terms: usize },

    /// A series family was evaluated on a sequence whose indexing cannot
    /// represent the family's support.
    #[error("support mismatch: {0}")]
    SupportMismatch(String),

    /// Quadrature node/weight construction failed.
    #[error("quadrature error: {0}")]
    Quadrature(String),

    /// Spectral integral violates its growth contract.
    #[error("divergent spectral integral: {0}")]
    Divergence(String),
}
