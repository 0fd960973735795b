//! Hardy-space classification of the normalized q-Bessel functions and the
//! Hadamard-convolution certificates built on top of it.
//!
//! Membership in a Hardy space H^p follows from convexity of order alpha:
//! a convex function of order alpha that avoids the two exceptional closed
//! forms lies in H^(1/(1-2 alpha)) for alpha in [0, 1/2) and in H^infinity
//! for alpha >= 1/2. Failure of the hypotheses yields `Unclassified`, never
//! a claim of non-membership.

use num_complex::Complex64;
use serde::Serialize;

use crate::domain::{QDomain, Tolerance};
use crate::error::Error;
use crate::geomclass::{
    corollary_flags, gamma_combine, kappa_closed_bound, p0_alpha_bound, positivity_condition,
    ConditionReport, GeomProperty,
};
use crate::qbessel::{majorant_ratio, series_h, FamilyKind};
use crate::series::CoefficientSeries;
use crate::sums::{geom_sum_closed, GeomSumKind};

/// Which rule produced a Hardy verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HardyBasis {
    /// Convexity of order alpha < 1/2 plus the exceptional-form exclusion.
    ConvexFiniteOrder,
    /// Convexity of order alpha > 1/2: bounded on the disk.
    ConvexBounded,
    /// The boundary case alpha = 1/2, via the logarithmic exceptional form.
    ConvexBoundedBoundary,
}

impl HardyBasis {
    pub fn name(self) -> &'static str {
        match self {
            HardyBasis::ConvexFiniteOrder => "convex-finite-order",
            HardyBasis::ConvexBounded => "convex-bounded",
            HardyBasis::ConvexBoundedBoundary => "convex-bounded-boundary",
        }
    }
}

/// Hardy-space classification result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HardyMembership {
    /// h lies in H^exponent with exponent = 1/(1 - 2 alpha), alpha in [0,1/2).
    FiniteExponent { exponent: f64, basis: HardyBasis },
    /// h is bounded on the disk (H^infinity).
    Infinity { basis: HardyBasis },
    /// The sufficient conditions failed; nothing is claimed.
    Unclassified,
}

impl HardyMembership {
    pub fn basis_name(&self) -> &'static str {
        match self {
            HardyMembership::FiniteExponent { basis, .. } => basis.name(),
            HardyMembership::Infinity { basis, .. } => basis.name(),
            HardyMembership::Unclassified => "unclassified",
        }
    }
}

/// Classify h for the given family under the convexity route: requires the
/// positivity condition and the convex coefficient bound at alpha, plus the
/// (always satisfied for these series, but still checked) exclusion of the
/// exceptional closed forms.
pub fn hardy_classify(
    kind: FamilyKind,
    qd: &QDomain,
    alpha: f64,
) -> Result<HardyMembership, Error> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in [0,1), got {alpha}"
        )));
    }
    if !positivity_condition(kind, qd).holds {
        return Ok(HardyMembership::Unclassified);
    }
    if !kappa_closed_bound(kind, GeomProperty::Convex, qd, alpha)?.holds {
        return Ok(HardyMembership::Unclassified);
    }
    let series = series_h(kind, qd, &Tolerance::default())?;
    if is_exceptional_form(&series, alpha) {
        return Ok(HardyMembership::Unclassified);
    }
    Ok(if alpha < 0.5 {
        HardyMembership::FiniteExponent {
            exponent: 1.0 / (1.0 - 2.0 * alpha),
            basis: HardyBasis::ConvexFiniteOrder,
        }
    } else if alpha == 0.5 {
        HardyMembership::Infinity {
            basis: HardyBasis::ConvexBoundedBoundary,
        }
    } else {
        HardyMembership::Infinity {
            basis: HardyBasis::ConvexBounded,
        }
    })
}

/// Residual of the best match of the series against the exceptional closed
/// forms
///
///   k + l z (1 - z e^(i theta))^(2 alpha - 1)   (alpha != 1/2)
///   k + l log(1 - z e^(i theta))                (alpha  = 1/2)
///
/// over k, l complex and theta real. Normalization forces k = 0 and l; the
/// second coefficient determines e^(i theta) up to a modulus obstruction, and
/// the next coefficient must then match its predicted value. Returns the
/// first nonzero obstruction (a positive residual means "not of the form");
/// returns infinity when fewer than three coefficients are stored.
pub fn exceptional_form_residual(s: &CoefficientSeries, alpha: f64) -> f64 {
    if s.len() < 3 {
        return f64::INFINITY;
    }
    let a2 = s.coeff(2);
    let a3 = s.coeff(3);
    if alpha == 0.5 {
        // a_2 = e^(i theta)/2, a_3 = e^(2 i theta)/3
        let modulus_gap = (a2.norm() - 0.5).abs();
        if modulus_gap > 1e-12 {
            return modulus_gap;
        }
        let u = 2.0 * a2 / (2.0 * a2).norm();
        return (a3 - u * u / 3.0).norm();
    }
    // a_2 = beta e^(i theta), a_3 = beta(beta+1)/2 e^(2 i theta),
    // with beta = 1 - 2 alpha
    let beta = 1.0 - 2.0 * alpha;
    let modulus_gap = (a2.norm() - beta.abs()).abs();
    if modulus_gap > 1e-12 {
        return modulus_gap;
    }
    let u = a2 / beta;
    let u = u / u.norm();
    (a3 - Complex64::new(beta * (beta + 1.0) / 2.0, 0.0) * u * u).norm()
}

/// True when the stored coefficients are consistent with one of the
/// exceptional closed forms (residual below 1e-10).
pub fn is_exceptional_form(s: &CoefficientSeries, alpha: f64) -> bool {
    exceptional_form_residual(s, alpha) < 1e-10
}

/// Coefficient filter n |a_n| <= 2 for n >= 2, a necessary consequence of
/// Re f' > 0 on the disk. Used as the admission test for convolution
/// certificates; equality passes.
pub fn macgregor_check(f: &CoefficientSeries) -> bool {
    first_macgregor_violation(f).is_none()
}

fn first_macgregor_violation(f: &CoefficientSeries) -> Option<(usize, f64)> {
    (2..=f.len()).find_map(|n| {
        let v = n as f64 * f.coeff(n).norm();
        (v > 2.0).then_some((n, v))
    })
}

/// Explicit bound for |h * f| on the closed disk when f satisfies the
/// coefficient filter: 1 + (2/rho)(log(1/(1-rho)) - rho), where rho is the
/// family's geometric majorant ratio. Requires the stronger positivity
/// hypothesis 4(1-q)(1-q^nu) > 3 q^nu (second family) resp.
/// (1-q)(1-q^nu) > 3 sqrt(q) (third), which forces rho < 1/3.
pub fn hadamard_sup_bound(kind: FamilyKind, qd: &QDomain) -> Result<f64, Error> {
    let hyp = convolution_hypothesis(kind, qd);
    if !hyp.holds {
        return Err(Error::HypothesisFailed(format!(
            "{} = {} is not positive",
            hyp.id.name(),
            hyp.lhs_value
        )));
    }
    let rho = majorant_ratio(kind, qd).expect("hypothesis implies nu > 0");
    // 1 + (2/rho) sum_{n>=2} rho^n / n
    Ok(1.0 + 2.0 / rho * geom_sum_closed(GeomSumKind::ReciprocalN, rho)?)
}

/// The positivity condition backing the convolution boundedness result for
/// the given family (the P0(1/2) condition of that family).
pub fn convolution_hypothesis(kind: FamilyKind, qd: &QDomain) -> ConditionReport {
    let flags = corollary_flags(qd);
    match kind {
        FamilyKind::Second => flags[2], // 4(1-q)(1-q^nu) - 3 q^nu
        FamilyKind::Third => flags[3],  // (1-q)(1-q^nu) - 3 sqrt(q)
    }
}

/// Certificate that u = h * f is bounded on the disk and has Re u' > 0,
/// conditional on the residual hypothesis named in `assumes`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvolutionCertificate {
    pub sup_bound: f64,
    pub hypothesis: ConditionReport,
    /// The part of the hypothesis that finitely many coefficients cannot
    /// decide; the verdict is conditional on it.
    pub assumes: &'static str,
}

/// Certify u = h * f in H^infinity (with the explicit sup bound) and in the
/// class of functions with positive derivative real part.
///
/// Checks everything checkable: the coefficient filter on f (necessary for
/// f to have Re f' > 0) and the family's convolution hypothesis. The residual
/// hypothesis "f really has Re f' > 0" is recorded, not assumed silently.
pub fn bounded_convolution_verdict(
    kind: FamilyKind,
    qd: &QDomain,
    f: &CoefficientSeries,
) -> Result<ConvolutionCertificate, Error> {
    if let Some((n, value)) = first_macgregor_violation(f) {
        return Err(Error::CoefficientBoundViolated { n, value });
    }
    let hypothesis = convolution_hypothesis(kind, qd);
    let sup_bound = hadamard_sup_bound(kind, qd)?;
    Ok(ConvolutionCertificate {
        sup_bound,
        hypothesis,
        assumes: "f has positive derivative real part on the disk",
    })
}

/// Certificate that u = h * f has derivative real part above gamma.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct R0ConvolutionCertificate {
    pub gamma: f64,
    pub p0_bound: f64,
    pub family: FamilyKind,
    pub assumes: &'static str,
}

/// Certify that u = h * f satisfies Re u' > gamma = 1 - 2(1-alpha)(1-beta)
/// whenever h/z lies in P0(alpha) (checked via the order bound) and f' lies
/// in P0(beta) (the recorded residual hypothesis).
pub fn convolution_r0_verdict(
    kind: FamilyKind,
    qd: &QDomain,
    alpha: f64,
    beta: f64,
) -> Result<R0ConvolutionCertificate, Error> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in [0,1), got {alpha}"
        )));
    }
    if !(beta < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "beta must be < 1, got {beta}"
        )));
    }
    let p0 = p0_alpha_bound(kind, qd)?;
    if !(alpha < p0.value) {
        return Err(Error::HypothesisFailed(format!(
            "alpha = {alpha} is not below the P0 order bound {}",
            p0.value
        )));
    }
    Ok(R0ConvolutionCertificate {
        gamma: gamma_combine(alpha, beta),
        p0_bound: p0.value,
        family: kind,
        assumes: "f' lies in P0(beta) on the disk",
    })
}
