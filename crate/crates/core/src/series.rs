//! Truncated normalized power series f(z) = z + a_2 z^2 + ... with a
//! certified bound on the discarded tail.

use num_complex::Complex64;

use crate::error::Error;

/// Per-coefficient tail certificate: |a_n| <= scale * ratio^(n - N) for all
/// n beyond the stored truncation order N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    pub scale: f64,
    pub ratio: f64,
}

impl TailBound {
    /// sum_{n > N} scale * ratio^(n-N) = scale * ratio / (1 - ratio).
    pub fn abs_sum(&self) -> f64 {
        self.scale * self.ratio / (1.0 - self.ratio)
    }
}

/// A normalized analytic function represented by coefficients a_1 = 1,
/// a_2, ..., a_N plus tail information for n > N.
///
/// `tail_sum` bounds sum_{n>N} |a_n| (so it also bounds the evaluation error
/// anywhere in the closed unit disk). When `tail` is present, the stronger
/// per-coefficient statement |a_n| <= scale * ratio^(n-N) holds for n > N,
/// which lets polynomially weighted sums over the tail be bounded in closed
/// form.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeries {
    coeffs: Vec<Complex64>,
    tail_sum: f64,
    tail: Option<TailBound>,
    label: String,
}

impl CoefficientSeries {
    /// Finitely supported series (zero tail). The leading coefficient must be
    /// exactly 1.
    pub fn from_coeffs(label: impl Into<String>, coeffs: Vec<Complex64>) -> Result<Self, Error> {
        Self::with_tail(label, coeffs, 0.0, None)
    }

    /// Convenience wrapper for real coefficient lists.
    pub fn from_real_coeffs(label: impl Into<String>, coeffs: &[f64]) -> Result<Self, Error> {
        Self::from_coeffs(
            label,
            coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        )
    }

    /// Full constructor with an explicit tail certificate.
    pub fn with_tail(
        label: impl Into<String>,
        coeffs: Vec<Complex64>,
        tail_sum: f64,
        tail: Option<TailBound>,
    ) -> Result<Self, Error> {
        if coeffs.first() != Some(&Complex64::new(1.0, 0.0)) {
            return Err(Error::InvalidParameter(
                "a normalized series needs a_1 = 1 exactly".into(),
            ));
        }
        if !(tail_sum >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "tail_sum must be >= 0, got {tail_sum}"
            )));
        }
        if let Some(tb) = tail {
            if !(tb.scale >= 0.0) || !(tb.ratio > 0.0 && tb.ratio < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "tail bound needs scale >= 0 and ratio in (0,1), got scale {} ratio {}",
                    tb.scale, tb.ratio
                )));
            }
        }
        Ok(Self {
            coeffs,
            tail_sum,
            tail,
            label: label.into(),
        })
    }

    /// The identity series f(z) = z.
    pub fn identity() -> Self {
        Self {
            coeffs: vec![Complex64::new(1.0, 0.0)],
            tail_sum: 0.0,
            tail: None,
            label: "identity".into(),
        }
    }

    /// Truncation of z/(1-z) (all coefficients 1), the convolution identity
    /// on its stored range. The full tail is not summable, which the infinite
    /// `tail_sum` records honestly.
    pub fn geometric_ones(len: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(1.0, 0.0); len.max(1)],
            tail_sum: f64::INFINITY,
            tail: None,
            label: "z/(1-z) truncation".into(),
        }
    }

    /// Number of stored coefficients (the truncation order N).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Never true: a_1 = 1 is always present.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// a_n for 1-indexed n; zero outside the stored range.
    pub fn coeff(&self, n: usize) -> Complex64 {
        if n >= 1 && n <= self.coeffs.len() {
            self.coeffs[n - 1]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn tail_sum(&self) -> f64 {
        self.tail_sum
    }

    pub fn tail(&self) -> Option<TailBound> {
        self.tail
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// sum a_n z^n over the stored coefficients (Horner). For |z| <= 1 the
    /// absolute error against the full series is at most `tail_sum`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &a in self.coeffs.iter().rev() {
            acc = acc * z + a;
        }
        acc * z
    }

    /// f'(z) = sum n a_n z^(n-1) over the stored coefficients.
    pub fn eval_derivative(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &a) in self.coeffs.iter().enumerate().rev() {
            acc = acc * z + (i as f64 + 1.0) * a;
        }
        acc
    }

    /// (S0, S1, S2) = (sum a_n z^n, sum n a_n z^n, sum n^2 a_n z^n) in one
    /// pass; these assemble every disk functional used by the oracle.
    pub fn weighted_sums(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let mut s0 = Complex64::new(0.0, 0.0);
        let mut s1 = s0;
        let mut s2 = s0;
        let mut zn = Complex64::new(1.0, 0.0);
        for (i, &a) in self.coeffs.iter().enumerate() {
            let n = i as f64 + 1.0;
            zn *= z;
            let t = a * zn;
            s0 += t;
            s1 += n * t;
            s2 += n * n * t;
        }
        (s0, s1, s2)
    }

    /// Largest |a_n| over stored n >= from (1-indexed, inclusive).
    pub(crate) fn max_abs_from(&self, from: usize) -> f64 {
        self.coeffs
            .iter()
            .skip(from.saturating_sub(1))
            .map(|a| a.norm())
            .fold(0.0, f64::max)
    }

    /// sum_{n > cut} |a_n| including the certified tail (cut <= len).
    fn abs_sum_beyond(&self, cut: usize) -> f64 {
        let stored: f64 = self.coeffs.iter().skip(cut).map(|a| a.norm()).sum();
        stored + self.tail_sum
    }

    /// sup_{n > cut} |a_n| including the certified tail.
    fn sup_beyond(&self, cut: usize) -> f64 {
        let stored = self.max_abs_from(cut + 1);
        let unstored = match self.tail {
            // |a_n| <= scale * ratio for the first coefficient past N,
            // and each term of a convergent positive sum is below the sum
            Some(tb) => (tb.scale * tb.ratio).min(self.tail_sum),
            None => self.tail_sum,
        };
        stored.max(unstored)
    }
}

/// Product that treats 0 * inf as 0: a zero mass bound annihilates the other
/// factor's (possibly unbounded) sup.
fn mul_bound(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        0.0
    } else {
        a * b
    }
}

/// Hadamard product (f * g)(z) = z + sum a_n b_n z^n, truncated at the
/// shorter of the two inputs.
///
/// The tail bound is the better of the two cross estimates
/// sum|a_n| * sup|b_n| and sum|b_n| * sup|a_n| over the discarded range. A
/// per-coefficient tail certificate survives whenever a factor truncated at
/// the cut carries one: its geometric bound times the other factor's sup.
pub fn hadamard(f: &CoefficientSeries, g: &CoefficientSeries) -> CoefficientSeries {
    let cut = f.len().min(g.len());
    let coeffs: Vec<Complex64> = (0..cut).map(|i| f.coeffs[i] * g.coeffs[i]).collect();

    let cross = mul_bound(f.abs_sum_beyond(cut), g.sup_beyond(cut))
        .min(mul_bound(g.abs_sum_beyond(cut), f.sup_beyond(cut)));

    let scaled = |a: &CoefficientSeries, b: &CoefficientSeries| -> Option<TailBound> {
        if a.len() != cut {
            return None;
        }
        let tb = a.tail?;
        let scale = mul_bound(tb.scale, b.sup_beyond(cut));
        scale.is_finite().then_some(TailBound {
            scale,
            ratio: tb.ratio,
        })
    };
    let tail = match (scaled(f, g), scaled(g, f)) {
        (Some(a), Some(b)) => Some(if a.abs_sum() <= b.abs_sum() { a } else { b }),
        (a, b) => a.or(b),
    };

    let tail_sum = match tail {
        Some(tb) => cross.min(tb.abs_sum()),
        None => cross,
    };

    CoefficientSeries {
        coeffs,
        tail_sum: if tail_sum.is_nan() {
            f64::INFINITY
        } else {
            tail_sum
        },
        tail,
        label: format!("({}) * ({})", f.label, g.label),
    }
}
