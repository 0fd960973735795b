//! Parameter domain and truncation policy shared by every operation.

use serde::Serialize;

use crate::error::Error;

/// The parameter pair (q, nu) with q in (0,1) and nu > -1.
///
/// Construction validates both bounds strictly; a `QDomain` value is always
/// inside the domain, so downstream code never re-checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QDomain {
    q: f64,
    nu: f64,
}

impl QDomain {
    pub fn new(q: f64, nu: f64) -> Result<Self, Error> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "q must lie in (0,1), got {q}"
            )));
        }
        if !(nu > -1.0) {
            return Err(Error::InvalidParameter(format!(
                "nu must be > -1, got {nu}"
            )));
        }
        Ok(Self { q, nu })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// q^nu, the quantity the second-family bounds are phrased in.
    pub fn q_pow_nu(&self) -> f64 {
        self.q.powf(self.nu)
    }

    /// (1-q)(1-q^nu). Every majorant in the crate is controlled by this
    /// product; it is positive exactly when nu > 0.
    pub fn c_factor(&self) -> f64 {
        (1.0 - self.q) * (1.0 - self.q_pow_nu())
    }
}

/// Series truncation policy: stop once a term falls below `term_cutoff`,
/// fail if `max_terms` is exhausted first.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    pub term_cutoff: f64,
    pub max_terms: usize,
}

impl Tolerance {
    pub fn new(term_cutoff: f64, max_terms: usize) -> Result<Self, Error> {
        if !(term_cutoff > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "term_cutoff must be > 0, got {term_cutoff}"
            )));
        }
        if max_terms < 2 {
            return Err(Error::InvalidParameter(format!(
                "max_terms must be >= 2, got {max_terms}"
            )));
        }
        Ok(Self {
            term_cutoff,
            max_terms,
        })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            term_cutoff: 1e-16,
            max_terms: 512,
        }
    }
}
