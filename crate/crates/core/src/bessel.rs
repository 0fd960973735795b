//! Classical Bessel function of the first kind by its power series, used as
//! the target of the q -> 1 limit probe.

use num_complex::Complex64;

use crate::domain::Tolerance;
use crate::error::Error;
use crate::gamma::gamma;

/// J_nu(z) = sum_{n>=0} (-1)^n (z/2)^(2n+nu) / (n! Gamma(n+nu+1)),
/// truncated once a term drops below the cutoff.
///
/// Fractional powers take the principal branch (argument in (-pi, pi]), the
/// single branch convention used library-wide. z = 0 is only admissible for
/// integer-like nu >= 0 where the limit is 1 (nu = 0) or 0 (nu > 0).
pub fn classical_bessel_j(nu: f64, z: Complex64, tol: &Tolerance) -> Result<Complex64, Error> {
    if !(nu > -1.0) {
        return Err(Error::InvalidParameter(format!(
            "nu must be > -1, got {nu}"
        )));
    }
    if z == Complex64::new(0.0, 0.0) {
        if nu == 0.0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if nu > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(Error::InvalidParameter(
            "z = 0 requires nu >= 0 (the series diverges for nu < 0)".into(),
        ));
    }
    let half = z / 2.0;
    // Gamma(nu+1) via log-gamma so large nu cannot overflow the ratio chain.
    let prefactor = half.powf(nu) / gamma(nu + 1.0);
    let scale = prefactor.norm();
    let minus_quarter_z2 = -half * half;

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 1..=tol.max_terms {
        let nf = n as f64;
        term *= minus_quarter_z2 / (nf * (nf + nu));
        sum += term;
        if term.norm() * scale < tol.term_cutoff {
            return Ok(prefactor * sum);
        }
    }
    Err(Error::NonConvergence {
        max_terms: tol.max_terms,
        last_term: term.norm() * scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn real(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn values_at_zero() {
        assert_eq!(
            classical_bessel_j(0.0, real(0.0), &tol()).unwrap(),
            real(1.0)
        );
        assert_eq!(
            classical_bessel_j(1.0, real(0.0), &tol()).unwrap(),
            real(0.0)
        );
        assert!(classical_bessel_j(-0.5, real(0.0), &tol()).is_err());
    }

    #[test]
    fn half_order_closed_form() {
        // J_{1/2}(z) = sqrt(2/(pi z)) sin z, so J_{1/2}(pi/2) = 2/pi
        let z = std::f64::consts::FRAC_PI_2;
        let v = classical_bessel_j(0.5, real(z), &tol()).unwrap();
        assert_relative_eq!(v.re, 2.0 / std::f64::consts::PI, max_relative = 1e-14);
        assert!(v.im.abs() < 1e-16);
    }

    #[test]
    fn small_argument_asymptotic() {
        // J_nu(z) ~ (z/2)^nu / Gamma(nu+1) to first order
        for &nu in &[0.0, 0.5, 1.0, 2.5] {
            let z = real(1e-4);
            let v = classical_bessel_j(nu, z, &tol()).unwrap();
            let leading = (z / 2.0).powf(nu) / gamma(nu + 1.0);
            assert!(
                (v - leading).norm() / leading.norm() < 1e-6,
                "nu = {nu}: {v} vs {leading}"
            );
        }
    }

    #[test]
    fn complex_argument_matches_series_symmetry() {
        // J_0 is even: J_0(-z) = J_0(z), also off the real axis
        let z = Complex64::new(0.7, 0.4);
        let a = classical_bessel_j(0.0, z, &tol()).unwrap();
        let b = classical_bessel_j(0.0, -z, &tol()).unwrap();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn moderate_argument_reference_value() {
        // J_0(2) = 0.22389077914123566805 (standard reference value)
        let v = classical_bessel_j(0.0, real(2.0), &tol()).unwrap();
        assert_relative_eq!(v.re, 0.22389077914123566805, max_relative = 1e-13);
        // J_1(1) = 0.44005058574493351596
        let v = classical_bessel_j(1.0, real(1.0), &tol()).unwrap();
        assert_relative_eq!(v.re, 0.44005058574493351596, max_relative = 1e-13);
    }
}
