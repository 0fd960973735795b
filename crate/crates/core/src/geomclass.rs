//! Sufficient-condition certificates for the normalized q-Bessel series:
//! positivity hypotheses, closed-form coefficient bounds for starlikeness and
//! convexity of order alpha, critical-order thresholds, and P0(alpha) bounds.
//!
//! Every check here is one-directional: `holds = true` certifies membership
//! through the coefficient inequality sum (n - alpha)|a_n| <= 1 - alpha
//! (starlike) or sum n(n - alpha)|a_n| <= 1 - alpha (convex); `false` only
//! means this route failed.

use serde::Serialize;

use crate::domain::QDomain;
use crate::error::Error;
use crate::qbessel::FamilyKind;
use crate::series::CoefficientSeries;

/// Identifiers for every inequality the crate reports on. The names are part
/// of the CSV/JSON surface and stay fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConditionId {
    /// 4(1-q)(1-q^nu) - q^nu > 0 (second family).
    Positivity2,
    /// (1-q)(1-q^nu) - sqrt(q) > 0 (third family).
    Positivity3,
    /// A - alpha B <= 1 - alpha, starlike weights, second family.
    StarlikeBound2,
    /// A - alpha B <= 1 - alpha, convex weights, second family.
    ConvexBound2,
    /// A - alpha B <= 1 - alpha, starlike weights, third family.
    StarlikeBound3,
    /// A - alpha B <= 1 - alpha, convex weights, third family.
    ConvexBound3,
    /// alpha below the P0 order bound, second family.
    P0Bound2,
    /// alpha below the P0 order bound, third family.
    P0Bound3,
    /// 2(1-q)(1-q^nu) - q^nu > 0: h2/z has positive real part.
    CorI,
    /// (1-q)(1-q^nu) - 2 sqrt(q) > 0: h3/z has positive real part.
    CorII,
    /// 4(1-q)(1-q^nu) - 3q^nu > 0: h2/z in P0(1/2).
    CorIII,
    /// (1-q)(1-q^nu) - 3 sqrt(q) > 0: h3/z in P0(1/2).
    CorVI,
}

impl ConditionId {
    pub const ALL: [ConditionId; 12] = [
        ConditionId::Positivity2,
        ConditionId::Positivity3,
        ConditionId::StarlikeBound2,
        ConditionId::ConvexBound2,
        ConditionId::StarlikeBound3,
        ConditionId::ConvexBound3,
        ConditionId::P0Bound2,
        ConditionId::P0Bound3,
        ConditionId::CorI,
        ConditionId::CorII,
        ConditionId::CorIII,
        ConditionId::CorVI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConditionId::Positivity2 => "Positivity2",
            ConditionId::Positivity3 => "Positivity3",
            ConditionId::StarlikeBound2 => "StarlikeBound2",
            ConditionId::ConvexBound2 => "ConvexBound2",
            ConditionId::StarlikeBound3 => "StarlikeBound3",
            ConditionId::ConvexBound3 => "ConvexBound3",
            ConditionId::P0Bound2 => "P0Bound2",
            ConditionId::P0Bound3 => "P0Bound3",
            ConditionId::CorI => "CorI",
            ConditionId::CorII => "CorII",
            ConditionId::CorIII => "CorIII",
            ConditionId::CorVI => "CorVI",
        }
    }
}

/// Outcome of one hypothesis test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionReport {
    pub id: ConditionId,
    pub lhs_value: f64,
    pub holds: bool,
}

/// Which geometric property the coefficient bound certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeomProperty {
    Starlike,
    Convex,
}

impl GeomProperty {
    pub const BOTH: [GeomProperty; 2] = [GeomProperty::Starlike, GeomProperty::Convex];
}

/// A critical order together with a flag recording whether "alpha below the
/// value" is the right reading (true exactly when the rearranged inequality
/// has a positive denominator, i.e. B < 1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaThreshold {
    pub value: f64,
    pub direction_valid: bool,
}

/// Positivity hypothesis of the coefficient-bound route:
/// 4(1-q)(1-q^nu) - q^nu (second) or (1-q)(1-q^nu) - sqrt(q) (third).
/// Strictly positive is required; ties fail.
pub fn positivity_condition(kind: FamilyKind, qd: &QDomain) -> ConditionReport {
    let c = qd.c_factor();
    let (id, lhs) = match kind {
        FamilyKind::Second => (ConditionId::Positivity2, 4.0 * c - qd.q_pow_nu()),
        FamilyKind::Third => (ConditionId::Positivity3, c - qd.q().sqrt()),
    };
    ConditionReport {
        id,
        lhs_value: lhs,
        holds: lhs > 0.0,
    }
}

/// The closed-form pair (A, B) with kappa <= A - alpha B, obtained by summing
/// the geometric majorant of the weighted coefficient sums:
///
/// second family (C = (1-q)(1-q^nu), D = 4C - q^nu):
///   starlike: A = q^nu (8C - q^nu)/D^2,                B = q^nu / D
///   convex:   A = q^nu (64C^2 - 12 q^nu C + q^2nu)/D^3, B = q^nu (8C - q^nu)/D^2
///
/// third family (E = C - sqrt(q), s = sqrt(q)):
///   starlike: A = (2sC - q)/E^2,                        B = s / E
///   convex:   A = (4sC^2 - 3qC + qs)/E^3,               B = (2sC - q)/E^2
pub(crate) fn closed_ab(
    kind: FamilyKind,
    property: GeomProperty,
    qd: &QDomain,
) -> Result<(f64, f64), Error> {
    let positivity = positivity_condition(kind, qd);
    if !positivity.holds {
        return Err(Error::HypothesisFailed(format!(
            "{} = {} is not positive",
            positivity.id.name(),
            positivity.lhs_value
        )));
    }
    let c = qd.c_factor();
    Ok(match kind {
        FamilyKind::Second => {
            let p = qd.q_pow_nu();
            let d = 4.0 * c - p;
            match property {
                GeomProperty::Starlike => (p * (8.0 * c - p) / (d * d), p / d),
                GeomProperty::Convex => (
                    p * (64.0 * c * c - 12.0 * p * c + p * p) / (d * d * d),
                    p * (8.0 * c - p) / (d * d),
                ),
            }
        }
        FamilyKind::Third => {
            let s = qd.q().sqrt();
            let q = qd.q();
            let e = c - s;
            match property {
                GeomProperty::Starlike => ((2.0 * s * c - q) / (e * e), s / e),
                GeomProperty::Convex => (
                    (4.0 * s * c * c - 3.0 * q * c + q * s) / (e * e * e),
                    (2.0 * s * c - q) / (e * e),
                ),
            }
        }
    })
}

fn bound_id(kind: FamilyKind, property: GeomProperty) -> ConditionId {
    match (kind, property) {
        (FamilyKind::Second, GeomProperty::Starlike) => ConditionId::StarlikeBound2,
        (FamilyKind::Second, GeomProperty::Convex) => ConditionId::ConvexBound2,
        (FamilyKind::Third, GeomProperty::Starlike) => ConditionId::StarlikeBound3,
        (FamilyKind::Third, GeomProperty::Convex) => ConditionId::ConvexBound3,
    }
}

fn validate_alpha(alpha: f64) -> Result<(), Error> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in [0,1), got {alpha}"
        )));
    }
    Ok(())
}

/// Direct check A - alpha B <= 1 - alpha (ties hold). When it holds, the
/// normalized function is starlike (resp. convex) of order alpha via the
/// coefficient criterion; the positivity hypothesis is a precondition.
pub fn kappa_closed_bound(
    kind: FamilyKind,
    property: GeomProperty,
    qd: &QDomain,
    alpha: f64,
) -> Result<ConditionReport, Error> {
    validate_alpha(alpha)?;
    let (a, b) = closed_ab(kind, property, qd)?;
    let lhs = a - alpha * b;
    Ok(ConditionReport {
        id: bound_id(kind, property),
        lhs_value: lhs,
        holds: lhs <= 1.0 - alpha,
    })
}

/// Critical order (1-A)/(1-B). When `direction_valid` (B < 1), the closed
/// bound holds exactly for alpha <= value; the expression agrees
/// algebraically with the rational forms in q, q^nu.
pub fn alpha_threshold(
    kind: FamilyKind,
    property: GeomProperty,
    qd: &QDomain,
) -> Result<AlphaThreshold, Error> {
    let (a, b) = closed_ab(kind, property, qd)?;
    Ok(AlphaThreshold {
        value: (1.0 - a) / (1.0 - b),
        direction_valid: b < 1.0,
    })
}

/// Truncated weighted coefficient sum sum_{n>=2} w(n)|a_n| with
/// w(n) = n - alpha (starlike) or n(n - alpha) (convex), plus a certified
/// tail estimate.
///
/// The tail uses the stored geometric ratio when present (closed forms for
/// sum n rho^(n-1) and sum n^2 rho^(n-1) past the truncation); a series with
/// positive tail mass but no ratio information reports an infinite tail,
/// since polynomial weights against an arbitrary l^1 tail are unbounded.
pub fn kappa_direct(s: &CoefficientSeries, alpha: f64, property: GeomProperty) -> f64 {
    let mut sum = 0.0;
    for n in 2..=s.len() {
        let nf = n as f64;
        let w = match property {
            GeomProperty::Starlike => nf - alpha,
            GeomProperty::Convex => nf * (nf - alpha),
        };
        sum += w * s.coeff(n).norm();
    }
    sum + kappa_tail_estimate(s, alpha, property)
}

fn kappa_tail_estimate(s: &CoefficientSeries, alpha: f64, property: GeomProperty) -> f64 {
    if s.tail_sum() == 0.0 {
        return 0.0;
    }
    let Some(tb) = s.tail() else {
        return f64::INFINITY;
    };
    if tb.scale == 0.0 {
        return 0.0;
    }
    let n = s.len() as f64;
    let r = tb.ratio;
    let g1 = r / (1.0 - r); // sum_{m>=1} r^m
    let g2 = r / ((1.0 - r) * (1.0 - r)); // sum_{m>=1} m r^m
    let g3 = r * (1.0 + r) / ((1.0 - r) * (1.0 - r) * (1.0 - r)); // sum m^2 r^m
    let t1 = tb.scale * g1;
    let t2 = tb.scale * (n * g1 + g2);
    let t3 = tb.scale * (n * n * g1 + 2.0 * n * g2 + g3);
    match property {
        GeomProperty::Starlike => t2 - alpha * t1,
        GeomProperty::Convex => t3 - alpha * t2,
    }
}

/// P0 order bound: h/z lies in P0(alpha) for every alpha in [0,1) strictly
/// below the returned value, which is (4C - 2q^nu)/(4C - q^nu) for the second
/// family and (C - 2 sqrt q)/(C - sqrt q) for the third. Requires positivity.
pub fn p0_alpha_bound(kind: FamilyKind, qd: &QDomain) -> Result<AlphaThreshold, Error> {
    let positivity = positivity_condition(kind, qd);
    if !positivity.holds {
        return Err(Error::HypothesisFailed(format!(
            "{} = {} is not positive",
            positivity.id.name(),
            positivity.lhs_value
        )));
    }
    let c = qd.c_factor();
    let value = match kind {
        FamilyKind::Second => {
            let p = qd.q_pow_nu();
            (4.0 * c - 2.0 * p) / (4.0 * c - p)
        }
        FamilyKind::Third => {
            let s = qd.q().sqrt();
            (c - 2.0 * s) / (c - s)
        }
    };
    // the rearrangement denominator is the (positive) positivity lhs
    Ok(AlphaThreshold {
        value,
        direction_valid: true,
    })
}

/// P0 membership at a given alpha as a reportable condition:
/// lhs = bound - alpha, holds when positivity holds and lhs > 0.
pub fn p0_condition(kind: FamilyKind, qd: &QDomain, alpha: f64) -> Result<ConditionReport, Error> {
    validate_alpha(alpha)?;
    let id = match kind {
        FamilyKind::Second => ConditionId::P0Bound2,
        FamilyKind::Third => ConditionId::P0Bound3,
    };
    match p0_alpha_bound(kind, qd) {
        Ok(t) => Ok(ConditionReport {
            id,
            lhs_value: t.value - alpha,
            holds: t.value - alpha > 0.0,
        }),
        Err(Error::HypothesisFailed(_)) => Ok(ConditionReport {
            id,
            lhs_value: f64::NAN,
            holds: false,
        }),
        Err(e) => Err(e),
    }
}

/// The four auxiliary positivity conditions obtained from the P0 bound at
/// alpha = 0 and alpha = 1/2:
///
/// * CorI:   2(1-q)(1-q^nu) - q^nu > 0        => h2/z in P0(0)
/// * CorII:  (1-q)(1-q^nu) - 2 sqrt(q) > 0    => h3/z in P0(0)
/// * CorIII: 4(1-q)(1-q^nu) - 3 q^nu > 0      => h2/z in P0(1/2)
/// * CorVI:  (1-q)(1-q^nu) - 3 sqrt(q) > 0    => h3/z in P0(1/2)
pub fn corollary_flags(qd: &QDomain) -> [ConditionReport; 4] {
    let c = qd.c_factor();
    let p = qd.q_pow_nu();
    let s = qd.q().sqrt();
    let report = |id, lhs: f64| ConditionReport {
        id,
        lhs_value: lhs,
        holds: lhs > 0.0,
    };
    [
        report(ConditionId::CorI, 2.0 * c - p),
        report(ConditionId::CorII, c - 2.0 * s),
        report(ConditionId::CorIII, 4.0 * c - 3.0 * p),
        report(ConditionId::CorVI, c - 3.0 * s),
    ]
}

/// Combined order for a convolution of P0(alpha) and P0(beta) factors:
/// gamma = 1 - 2(1-alpha)(1-beta). Symmetric, and always < 1.
pub fn gamma_combine(alpha: f64, beta: f64) -> f64 {
    assert!(
        alpha < 1.0 && beta < 1.0,
        "gamma_combine requires alpha < 1 and beta < 1"
    );
    1.0 - 2.0 * (1.0 - alpha) * (1.0 - beta)
}
