//! q-Pochhammer symbols, finite and infinite, and the normalization constant
//! c_nu(q) = (q;q)_inf / (q^(nu+1);q)_inf.

use crate::domain::{QDomain, Tolerance};
use crate::error::Error;

/// Finite q-Pochhammer symbol (a;q)_n = prod_{k=1..n} (1 - a q^(k-1)).
///
/// (a;q)_0 = 1 (empty product).
pub fn qpochhammer(a: f64, q: f64, n: u32) -> f64 {
    let mut product = 1.0;
    let mut aqk = a; // a * q^(k-1)
    for _ in 0..n {
        product *= 1.0 - aqk;
        aqk *= q;
    }
    product
}

/// An infinite product truncated at the cutoff, together with a certified
/// absolute error bound for the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfiniteProduct {
    pub value: f64,
    pub error_bound: f64,
}

/// Infinite q-Pochhammer symbol (a;q)_inf = prod_{k>=1} (1 - a q^(k-1)),
/// truncated once the factor deviation |a q^(k-1)| drops below the cutoff.
///
/// The remaining factors multiply the partial product by at most
/// exp(sum of remaining deviations / (1 - largest deviation)), which the
/// geometric tail bounds by `term_cutoff * |partial| / (1-q)` to first order.
pub fn qpochhammer_inf(a: f64, q: f64, tol: &Tolerance) -> Result<InfiniteProduct, Error> {
    if !(a.abs() < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "infinite q-Pochhammer requires |a| < 1, got a = {a}"
        )));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "q must lie in (0,1), got {q}"
        )));
    }
    let mut product = 1.0;
    let mut deviation = a;
    let mut terms = 0usize;
    while deviation.abs() >= tol.term_cutoff {
        terms += 1;
        if terms > tol.max_terms {
            return Err(Error::NonConvergence {
                max_terms: tol.max_terms,
                last_term: deviation,
            });
        }
        product *= 1.0 - deviation;
        deviation *= q;
    }
    Ok(InfiniteProduct {
        value: product,
        error_bound: tol.term_cutoff * product.abs() / (1.0 - q),
    })
}

/// c_nu(q) = (q;q)_inf / (q^(nu+1);q)_inf, via two truncated products.
pub fn c_nu(qd: &QDomain, tol: &Tolerance) -> Result<f64, Error> {
    let numerator = qpochhammer_inf(qd.q(), qd.q(), tol)?;
    let denominator = qpochhammer_inf(qd.q().powf(qd.nu() + 1.0), qd.q(), tol)?;
    Ok(numerator.value / denominator.value)
}

/// ln[(q;q)_inf / (q^(nu+1);q)_inf], summed factor by factor in log space.
///
/// Unlike [`c_nu`] this never underflows as q -> 1 (both products vanish like
/// exp(-O(1/(1-q))) individually while the ratio stays moderate), so the raw
/// q-Bessel evaluation uses this route for its prefactor. The iteration count
/// depends only on q and the cutoff, so the budget is sized internally.
pub(crate) fn ln_c_nu(qd: &QDomain, term_cutoff: f64) -> f64 {
    let q = qd.q();
    let q_nu = qd.q_pow_nu();
    let mut acc = 0.0;
    let mut qk = q; // q^k
    loop {
        acc += ((1.0 - qk) / (1.0 - q_nu * qk)).ln();
        // Remaining |ln| terms are below q^(k+1)|1-q^nu| / ((1-m)(1-q))
        // with m the largest remaining deviation.
        let m = (qk * q).max(q_nu * qk * q);
        let remainder = qk * q * (1.0 - q_nu).abs() / ((1.0 - m) * (1.0 - q));
        if remainder < term_cutoff || qk == 0.0 {
            return acc;
        }
        qk *= q;
    }
}
