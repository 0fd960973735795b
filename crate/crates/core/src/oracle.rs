//! Brute-force verification of the closed-form certificates: sample the
//! defining functionals on the disk, compute integral means, and tie
//! certificates to measurements.
//!
//! Sampling never proves non-membership. The only claim a sample run can
//! support is the implication "certificate holds => sampled minimum stays
//! above alpha (within tolerance)", and that is the claim checked here.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::domain::{QDomain, Tolerance};
use crate::error::Error;
use crate::geomclass::{kappa_closed_bound, p0_condition, GeomProperty};
use crate::qbessel::{series_h, FamilyKind};
use crate::series::CoefficientSeries;

/// Sampling tolerance for implication checks: grid minima cannot resolve the
/// true infimum, so certificates are only required to clear alpha minus this.
pub const IMPLICATION_TOL: f64 = 1e-3;

/// Denominator guard below which a quotient sample is reported as unbounded
/// instead of trusted.
const DENOM_GUARD: f64 = 1e-12;

/// Polar sampling grid for the open unit disk: `angular_count` equispaced
/// angles on each of `radial_count` circles with radii radius^k
/// (k = radial_count .. 1), clustering geometrically toward the boundary
/// where the functional minima live.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiskGrid {
    pub radius: f64,
    pub angular_count: usize,
    pub radial_count: usize,
}

impl DiskGrid {
    pub fn new(radius: f64, angular_count: usize, radial_count: usize) -> Result<Self, Error> {
        if !(radius > 0.0 && radius < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "grid radius must lie in (0,1), got {radius}"
            )));
        }
        if angular_count < 1 || radial_count < 1 {
            return Err(Error::InvalidParameter(
                "grid counts must be >= 1".into(),
            ));
        }
        Ok(Self {
            radius,
            angular_count,
            radial_count,
        })
    }

    /// Radii from the innermost circle out to `radius` itself.
    pub fn radii(&self) -> Vec<f64> {
        (0..self.radial_count)
            .map(|i| self.radius.powi((self.radial_count - i) as i32))
            .collect()
    }
}

impl Default for DiskGrid {
    fn default() -> Self {
        Self {
            radius: 0.999,
            angular_count: 4096,
            radial_count: 16,
        }
    }
}

/// The disk functionals whose real-part minima define the function classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Functional {
    /// Re( z f'(z) / f(z) ), the starlikeness quotient.
    StarlikeQuotient,
    /// Re( 1 + z f''(z) / f'(z) ), the convexity quotient.
    ConvexQuotient,
    /// Re( f(z) / z ).
    RatioOverZ,
}

/// Minimum of the real part of the selected functional over the grid.
///
/// In terms of the weighted sums S_k = sum n^k a_n z^n the three quotients
/// are S1/S0, S2/S1 and S0/z. Near-zero denominators (|.| < 1e-12) abort the
/// scan with an `UnboundedFunctional` error rather than returning a garbage
/// minimum. The reduction is a plain f64 min, so the result is bit-stable
/// under any parallel split.
pub fn min_re_functional(
    s: &CoefficientSeries,
    functional: Functional,
    grid: &DiskGrid,
) -> Result<f64, Error> {
    let radii = grid.radii();
    let per_circle: Result<Vec<f64>, Error> = radii
        .par_iter()
        .map(|&r| circle_min(s, functional, r, grid.angular_count))
        .collect();
    Ok(per_circle?.into_iter().fold(f64::INFINITY, f64::min))
}

fn circle_min(
    s: &CoefficientSeries,
    functional: Functional,
    r: f64,
    angular_count: usize,
) -> Result<f64, Error> {
    let mut min = f64::INFINITY;
    for k in 0..angular_count {
        let theta = std::f64::consts::TAU * k as f64 / angular_count as f64;
        let z = Complex64::from_polar(r, theta);
        let (s0, s1, s2) = s.weighted_sums(z);
        let value = match functional {
            Functional::StarlikeQuotient => {
                if s0.norm() < DENOM_GUARD {
                    return Err(Error::UnboundedFunctional { denom: s0.norm() });
                }
                (s1 / s0).re
            }
            Functional::ConvexQuotient => {
                if s1.norm() < DENOM_GUARD {
                    return Err(Error::UnboundedFunctional { denom: s1.norm() });
                }
                (s2 / s1).re
            }
            Functional::RatioOverZ => (s0 / z).re,
        };
        min = min.min(value);
    }
    Ok(min)
}

/// Integral mean M_p(r, f): the p-th root of the angular average of |f|^p
/// for finite p (trapezoidal rule on the periodic grid), the sample maximum
/// for p = infinity.
pub fn integral_mean(
    s: &CoefficientSeries,
    r: f64,
    p: f64,
    angular_count: usize,
) -> Result<f64, Error> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "integral mean radius must lie in (0,1), got {r}"
        )));
    }
    if !(p > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "integral mean exponent must be positive, got {p}"
        )));
    }
    if angular_count < 1 {
        return Err(Error::InvalidParameter(
            "angular_count must be >= 1".into(),
        ));
    }
    let samples = (0..angular_count).map(|k| {
        let theta = std::f64::consts::TAU * k as f64 / angular_count as f64;
        s.eval(Complex64::from_polar(r, theta)).norm()
    });
    if p.is_infinite() {
        Ok(samples.fold(0.0, f64::max))
    } else {
        let mean: f64 = samples.map(|v| v.powf(p)).sum::<f64>() / angular_count as f64;
        Ok(mean.powf(1.0 / p))
    }
}

/// Which certified property a cross-check exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertProperty {
    Starlike,
    Convex,
    P0,
}

impl CertProperty {
    pub const ALL: [CertProperty; 3] = [
        CertProperty::Starlike,
        CertProperty::Convex,
        CertProperty::P0,
    ];

    fn functional(self) -> Functional {
        match self {
            CertProperty::Starlike => Functional::StarlikeQuotient,
            CertProperty::Convex => Functional::ConvexQuotient,
            CertProperty::P0 => Functional::RatioOverZ,
        }
    }
}

/// One certificate-vs-sampling comparison. `implication_ok` is the only
/// judgement: certificate => sampled min >= alpha - IMPLICATION_TOL. A false
/// certificate never turns a low sampled minimum into a failure.
#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckReport {
    pub family: FamilyKind,
    pub q: f64,
    pub nu: f64,
    pub alpha: f64,
    pub property: CertProperty,
    pub certificate: bool,
    pub sampled_min: Option<f64>,
    pub sample_failure: Option<String>,
    pub implication_ok: bool,
}

/// Run both sides unconditionally: the closed-form certificate at alpha and
/// the sampled minimum of the matching functional, then test the implication.
pub fn crosscheck_sufficient_vs_sampled(
    kind: FamilyKind,
    qd: &QDomain,
    alpha: f64,
    property: CertProperty,
    grid: &DiskGrid,
    tol: &Tolerance,
) -> Result<CrossCheckReport, Error> {
    let certificate = match property {
        CertProperty::Starlike => kappa_closed_bound(kind, GeomProperty::Starlike, qd, alpha)
            .map(|r| r.holds)
            .unwrap_or(false),
        CertProperty::Convex => kappa_closed_bound(kind, GeomProperty::Convex, qd, alpha)
            .map(|r| r.holds)
            .unwrap_or(false),
        CertProperty::P0 => p0_condition(kind, qd, alpha)?.holds,
    };
    let series = series_h(kind, qd, tol)?;
    let (sampled_min, sample_failure) =
        match min_re_functional(&series, property.functional(), grid) {
            Ok(v) => (Some(v), None),
            Err(e) => (None, Some(e.to_string())),
        };
    let implication_ok = !certificate
        || sampled_min.is_some_and(|m| m >= alpha - IMPLICATION_TOL);
    Ok(CrossCheckReport {
        family: kind,
        q: qd.q(),
        nu: qd.nu(),
        alpha,
        property,
        certificate,
        sampled_min,
        sample_failure,
        implication_ok,
    })
}
