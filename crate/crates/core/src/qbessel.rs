//! Jackson's second and third q-Bessel functions: raw series evaluation, the
//! normalized coefficient sequences b_n, and the q -> 1 limit probe against
//! the classical Bessel function.
//!
//! The normalized functions are represented purely by their coefficients
//! (the defining displays clear all fractional powers); the fractional-power
//! normalization identity is exercised only as a cross-check on the positive
//! real axis, where branch questions vanish.

use num_complex::Complex64;
use serde::Serialize;

use crate::bessel::classical_bessel_j;
use crate::domain::{QDomain, Tolerance};
use crate::error::Error;
use crate::qseries::{ln_c_nu, qpochhammer};
use crate::series::{CoefficientSeries, TailBound};

/// Which of the two families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Second,
    Third,
}

impl FamilyKind {
    pub const BOTH: [FamilyKind; 2] = [FamilyKind::Second, FamilyKind::Third];

    pub fn label(self) -> &'static str {
        match self {
            FamilyKind::Second => "second",
            FamilyKind::Third => "third",
        }
    }
}

/// Coefficient b_n of the normalized series h(z) = z + sum_{n>=2} b_n z^n:
///
/// * second family: b_n = (-1)^(n-1) q^((n-1)(n-1+nu)) /
///   (4^(n-1) (q;q)_(n-1) (q^(nu+1);q)_(n-1))
/// * third family:  b_n = (-1)^(n-1) q^(n(n-1)/2) /
///   ((q;q)_(n-1) (q^(nu+1);q)_(n-1))
///
/// b_1 = 1 by normalization.
pub fn coeff_h(kind: FamilyKind, n: usize, qd: &QDomain) -> f64 {
    assert!(n >= 1, "coefficient index starts at 1");
    if n == 1 {
        return 1.0;
    }
    let q = qd.q();
    let nu = qd.nu();
    let m = (n - 1) as f64;
    let sign = if (n - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let denom = qpochhammer(q, q, (n - 1) as u32)
        * qpochhammer(q.powf(nu + 1.0), q, (n - 1) as u32);
    match kind {
        FamilyKind::Second => {
            sign * q.powf(m * (m + nu)) / (4f64.powf(m) * denom)
        }
        FamilyKind::Third => sign * q.powf(n as f64 * m / 2.0) / denom,
    }
}

/// Geometric majorant ratio rho with |b_n| <= rho^(n-1) for all n >= 1:
/// q^nu / (4(1-q)(1-q^nu)) for the second family, sqrt(q)/((1-q)(1-q^nu))
/// for the third. Only valid (returned) when nu > 0, where 1 - q^nu > 0.
pub fn majorant_ratio(kind: FamilyKind, qd: &QDomain) -> Option<f64> {
    if qd.nu() <= 0.0 {
        return None;
    }
    let c = qd.c_factor();
    Some(match kind {
        FamilyKind::Second => qd.q_pow_nu() / (4.0 * c),
        FamilyKind::Third => qd.q().sqrt() / c,
    })
}

/// |b_(n+1) / b_n| from the closed term-ratio formula (n >= 1).
pub(crate) fn coeff_ratio(kind: FamilyKind, n: usize, qd: &QDomain) -> f64 {
    let q = qd.q();
    let nu = qd.nu();
    let nf = n as f64;
    let poch_step = (1.0 - q.powf(nf)) * (1.0 - q.powf(nu + nf));
    match kind {
        FamilyKind::Second => q.powf(2.0 * nf - 1.0 + nu) / (4.0 * poch_step),
        FamilyKind::Third => q.powf(nf) / poch_step,
    }
}

/// Build the normalized series, truncating once |b_N| < term_cutoff and the
/// term ratios have fallen below 1/2 (the ratios are monotone decreasing in
/// n, so everything past the cut is dominated by |b_N| (1/2)^(n-N)).
///
/// Tail certificate: the stopping rule gives |b_n| <= |b_N| (1/2)^(n-N); for
/// nu > 0 with convergent majorant rho < 1 the alternative |b_n| <= rho^(n-1)
/// is also available, and the tighter of the two is stored.
pub fn series_h(
    kind: FamilyKind,
    qd: &QDomain,
    tol: &Tolerance,
) -> Result<CoefficientSeries, Error> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    let mut b = 1.0f64;
    let mut small_ratios = 0usize;
    loop {
        let n = coeffs.len(); // index of the coefficient we extend from
        if n > tol.max_terms {
            return Err(Error::NonConvergence {
                max_terms: tol.max_terms,
                last_term: b,
            });
        }
        let ratio = coeff_ratio(kind, n, qd);
        b = -b * ratio;
        coeffs.push(Complex64::new(b, 0.0));
        if ratio < 0.5 {
            small_ratios += 1;
        } else {
            small_ratios = 0;
        }
        if b.abs() < tol.term_cutoff && small_ratios >= 2 {
            break;
        }
    }

    let n_stored = coeffs.len();
    let mut tail = TailBound {
        scale: b.abs(),
        ratio: 0.5,
    };
    if let Some(rho) = majorant_ratio(kind, qd) {
        if rho < 1.0 {
            let majorant = TailBound {
                scale: rho.powi(n_stored as i32 - 1),
                ratio: rho,
            };
            if majorant.abs_sum() < tail.abs_sum() {
                tail = majorant;
            }
        }
    }
    let label = format!("h-{}(q={}, nu={})", kind.label(), qd.q(), qd.nu());
    CoefficientSeries::with_tail(label, coeffs, tail.abs_sum(), Some(tail))
}

/// A truncated evaluation together with a certified absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedValue {
    pub value: Complex64,
    pub error_bound: f64,
}

/// Raw Jackson q-Bessel function:
///
/// * second: (1/c_nu) sum_{n>=0} (-1)^n (z/2)^(2n+nu) q^(n(n+nu)) /
///   ((q;q)_n (q^(nu+1);q)_n)
/// * third:  (1/c_nu) sum_{n>=0} (-1)^n z^(2n+nu) q^(n(n+1)/2) /
///   ((q;q)_n (q^(nu+1);q)_n)
///
/// Fractional powers take the principal branch. The prefactor is computed in
/// log space so values remain finite arbitrarily close to q = 1.
pub fn eval_jackson(
    kind: FamilyKind,
    qd: &QDomain,
    z: Complex64,
    tol: &Tolerance,
) -> Result<CertifiedValue, Error> {
    let nu = qd.nu();
    if z == Complex64::new(0.0, 0.0) {
        if nu == 0.0 {
            return Ok(CertifiedValue {
                value: Complex64::new(1.0, 0.0),
                error_bound: 0.0,
            });
        }
        if nu > 0.0 {
            return Ok(CertifiedValue {
                value: Complex64::new(0.0, 0.0),
                error_bound: 0.0,
            });
        }
        return Err(Error::InvalidParameter(
            "z = 0 requires nu >= 0 for the raw q-Bessel series".into(),
        ));
    }
    let q = qd.q();
    let prefactor = (-ln_c_nu(qd, tol.term_cutoff)).exp();
    let base = match kind {
        FamilyKind::Second => z / 2.0,
        FamilyKind::Third => z,
    };
    let front = prefactor * base.powf(nu);
    let scale = front.norm();
    let base2 = base * base;

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..tol.max_terms {
        let nf = n as f64;
        let poch_step = (1.0 - q.powf(nf + 1.0)) * (1.0 - q.powf(nu + nf + 1.0));
        let q_step = match kind {
            FamilyKind::Second => q.powf(2.0 * nf + 1.0 + nu),
            FamilyKind::Third => q.powf(nf + 1.0),
        };
        let factor = -base2 * q_step / poch_step;
        term *= factor;
        sum += term;
        if term.norm() * scale < tol.term_cutoff && factor.norm() < 0.5 {
            return Ok(CertifiedValue {
                value: front * sum,
                // geometric tail below the last term, plus the prefactor's
                // own truncation error carried through the value
                error_bound: 2.0 * tol.term_cutoff * (1.0 + (front * sum).norm()),
            });
        }
    }
    Err(Error::NonConvergence {
        max_terms: tol.max_terms,
        last_term: term.norm() * scale,
    })
}

/// |J^(k)((1-q) z; q) - target| where target is J_nu(z) for the second
/// family and J_nu(2z) for the third. The error shrinks as q -> 1.
pub fn limit_relation_error(
    kind: FamilyKind,
    nu: f64,
    z: Complex64,
    q: f64,
) -> Result<f64, Error> {
    let qd = QDomain::new(q, nu)?;
    let tol = Tolerance::default();
    let target_arg = match kind {
        FamilyKind::Second => z,
        FamilyKind::Third => 2.0 * z,
    };
    let target = classical_bessel_j(nu, target_arg, &tol)?;
    let scaled = eval_jackson(kind, &qd, (1.0 - q) * z, &tol)?;
    Ok((scaled.value - target).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn qd(q: f64, nu: f64) -> QDomain {
        QDomain::new(q, nu).unwrap()
    }

    #[test]
    fn coefficients_hand_values() {
        // normalization
        assert_eq!(coeff_h(FamilyKind::Second, 1, &qd(0.37, 1.2)), 1.0);
        assert_eq!(coeff_h(FamilyKind::Third, 1, &qd(0.37, 1.2)), 1.0);
        // -q / (4 (1-q)(1-q)) at q = 0.5, nu = 0
        assert_relative_eq!(
            coeff_h(FamilyKind::Second, 2, &qd(0.5, 0.0)),
            -0.5,
            max_relative = 1e-15
        );
        // q^4 / (16 (q;q)_2^2) = 1/36 at q = 0.5, nu = 0
        assert_relative_eq!(
            coeff_h(FamilyKind::Second, 3, &qd(0.5, 0.0)),
            1.0 / 36.0,
            max_relative = 1e-14
        );
        // -q / ((1-q)(1-q)) at q = 0.5, nu = 0
        assert_relative_eq!(
            coeff_h(FamilyKind::Third, 2, &qd(0.5, 0.0)),
            -2.0,
            max_relative = 1e-15
        );
        // -0.1 / (0.9 * 0.99)
        assert_relative_eq!(
            coeff_h(FamilyKind::Third, 2, &qd(0.1, 1.0)),
            -0.11223344556677890011,
            max_relative = 1e-14
        );
    }

    #[test]
    fn term_ratio_matches_coefficient_quotient() {
        for kind in FamilyKind::BOTH {
            for &(q, nu) in &[(0.5, 0.0), (0.1, 1.0), (0.8, 2.3), (0.3, -0.4)] {
                let d = qd(q, nu);
                for n in 1..14 {
                    let quotient =
                        (coeff_h(kind, n + 1, &d) / coeff_h(kind, n, &d)).abs();
                    let formula = coeff_ratio(kind, n, &d);
                    assert!(
                        (quotient - formula).abs() <= 1e-13 * formula.max(1.0),
                        "{kind:?} q={q} nu={nu} n={n}: {quotient} vs {formula}"
                    );
                }
            }
        }
    }

    #[test]
    fn series_matches_direct_coefficients() {
        for kind in FamilyKind::BOTH {
            let d = qd(0.5, 0.7);
            let s = series_h(kind, &d, &tol()).unwrap();
            for n in 1..=s.len().min(12) {
                assert_relative_eq!(
                    s.coeff(n).re,
                    coeff_h(kind, n, &d),
                    max_relative = 1e-13,
                    epsilon = 1e-300
                );
                assert_eq!(s.coeff(n).im, 0.0);
            }
        }
    }

    #[test]
    fn series_eval_at_one_second_family() {
        // independent partial summation of the defining coefficients
        let d = qd(0.5, 0.0);
        let expected: f64 = (1..=25).map(|n| coeff_h(FamilyKind::Second, n, &d)).sum();
        let s = series_h(FamilyKind::Second, &d, &tol()).unwrap();
        let v = s.eval(Complex64::new(1.0, 0.0));
        assert_relative_eq!(v.re, expected, max_relative = 1e-13);
        // frozen from 50-digit summation
        assert_relative_eq!(v.re, 0.52749496061966123658, max_relative = 1e-13);
    }

    #[test]
    fn series_tail_certificate_negative_nu() {
        // nu <= 0 has no geometric majorant; the fallback must still certify
        let d = qd(0.3, -0.5);
        let s = series_h(FamilyKind::Second, &d, &tol()).unwrap();
        assert!(s.tail_sum() < 1e-15);
        let tb = s.tail().unwrap();
        assert_eq!(tb.ratio, 0.5);
        assert!(tb.scale < 1e-16);
        // sign alternation survives in the unbounded regime
        for n in 1..=6 {
            let expected_sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
            assert!(s.coeff(n).re * expected_sign > 0.0);
        }
    }

    #[test]
    fn raw_eval_edges() {
        // every term carries z^(2n+1) when nu = 1
        let v = eval_jackson(
            FamilyKind::Second,
            &qd(0.4, 1.0),
            Complex64::new(0.0, 0.0),
            &tol(),
        )
        .unwrap();
        assert_eq!(v.value, Complex64::new(0.0, 0.0));
        // nu = 0 at z = 0: only the n = 0 term survives and c_0 = 1
        let v = eval_jackson(
            FamilyKind::Third,
            &qd(0.4, 0.0),
            Complex64::new(0.0, 0.0),
            &tol(),
        )
        .unwrap();
        assert_eq!(v.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn raw_eval_frozen_values() {
        // frozen from 50-digit evaluation of the defining displays
        let v = eval_jackson(
            FamilyKind::Second,
            &qd(0.5, 0.0),
            Complex64::new(1.0, 0.0),
            &tol(),
        )
        .unwrap();
        assert_relative_eq!(v.value.re, 0.52749496061966123658, max_relative = 1e-12);
        let v = eval_jackson(
            FamilyKind::Third,
            &qd(0.25, 0.5),
            Complex64::new(0.5, 0.0),
            &tol(),
        )
        .unwrap();
        assert_relative_eq!(v.value.re, 0.78082911147855801364, max_relative = 1e-12);
    }

    #[test]
    fn normalization_identity_on_positive_axis() {
        // 2^nu c_nu w^(1-nu/2) J2(sqrt w) = h2(w) and
        // c_nu w^(1-nu/2) J3(sqrt w) = h3(w) for w in (0,1)
        let t = tol();
        // tolerance is conditioned on the absolute term sum: both routes add
        // the same alternating terms, which grow large before decaying when
        // (1-q)(1-q^nu) is small
        let allowed = |h: &crate::series::CoefficientSeries, jerr: f64, w: f64| {
            let conditioning: f64 =
                (1..=h.len()).map(|n| h.coeff(n).norm() * w.powi(n as i32)).sum();
            1e-12 + 1e-14 * conditioning + h.tail_sum() + 10.0 * jerr
        };
        for &(q, nu) in &[(0.5, 0.7), (0.2, 1.5), (0.85, 0.3)] {
            let d = qd(q, nu);
            let c = crate::qseries::c_nu(&d, &Tolerance::new(1e-16, 8192).unwrap()).unwrap();
            for &w in &[0.12f64, 0.49, 0.9] {
                let sqrt_w = Complex64::new(w.sqrt(), 0.0);
                let wf: f64 = w;
                let j2 = eval_jackson(FamilyKind::Second, &d, sqrt_w, &t).unwrap();
                let lhs2 = 2f64.powf(nu) * c * wf.powf(1.0 - nu / 2.0) * j2.value.re;
                let h2 = series_h(FamilyKind::Second, &d, &t).unwrap();
                let rhs2 = h2.eval(Complex64::new(w, 0.0)).re;
                assert!(
                    (lhs2 - rhs2).abs() < allowed(&h2, j2.error_bound, w),
                    "second: q={q} nu={nu} w={w}: {lhs2} vs {rhs2}"
                );
                let j3 = eval_jackson(FamilyKind::Third, &d, sqrt_w, &t).unwrap();
                let lhs3 = c * wf.powf(1.0 - nu / 2.0) * j3.value.re;
                let h3 = series_h(FamilyKind::Third, &d, &t).unwrap();
                let rhs3 = h3.eval(Complex64::new(w, 0.0)).re;
                assert!(
                    (lhs3 - rhs3).abs() < allowed(&h3, j3.error_bound, w),
                    "third: q={q} nu={nu} w={w}: {lhs3} vs {rhs3}"
                );
            }
        }
    }

    #[test]
    fn limit_relation_decreases_toward_one() {
        let z = Complex64::new(1.0, 0.0);
        let errs: Vec<f64> = [0.9, 0.99, 0.999]
            .iter()
            .map(|&q| limit_relation_error(FamilyKind::Second, 0.5, z, q).unwrap())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2]);
        assert!(errs[2] < 1e-2);
        // nu = 0 at z = 0: both sides are exactly 1
        let e =
            limit_relation_error(FamilyKind::Third, 0.0, Complex64::new(0.0, 0.0), 0.5).unwrap();
        assert_eq!(e, 0.0);
    }
}
