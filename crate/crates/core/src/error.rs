//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the documented domain (q, nu, alpha, grid sizes, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A truncated series or infinite product failed to reach the term cutoff
    /// within the allowed number of terms.
    #[error("no convergence within {max_terms} terms (last term {last_term:e}); raise max_terms or loosen the cutoff")]
    NonConvergence { max_terms: usize, last_term: f64 },

    /// A sufficient-condition hypothesis does not hold, so the requested
    /// certificate cannot be issued. Carries the failing condition.
    #[error("hypothesis not satisfied: {0}")]
    HypothesisFailed(String),

    /// The coefficient filter n|a_n| <= 2 rejected a candidate series.
    #[error("coefficient bound violated: n*|a_n| = {value} > 2 at n = {n}")]
    CoefficientBoundViolated { n: usize, value: f64 },

    /// A sampled quotient had a denominator too close to zero to trust.
    #[error("functional unbounded near sample: |denominator| = {denom:e}")]
    UnboundedFunctional { denom: f64 },
}
