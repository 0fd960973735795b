//! Closed forms of the geometric-type sums over n >= 2 that every coefficient
//! bound in this crate reduces to.

use crate::error::Error;

/// Which weighted geometric sum (all running over n >= 2, |r| < 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeomSumKind {
    /// sum r^(n-1) = r / (1-r)
    Plain,
    /// sum n r^(n-1) = r (2-r) / (1-r)^2
    Linear,
    /// sum n^2 r^(n-1) = r (r^2 - 3r + 4) / (1-r)^3
    Quadratic,
    /// sum r^n / n = log(1/(1-r)) - r
    ReciprocalN,
}

impl GeomSumKind {
    pub const ALL: [GeomSumKind; 4] = [
        GeomSumKind::Plain,
        GeomSumKind::Linear,
        GeomSumKind::Quadratic,
        GeomSumKind::ReciprocalN,
    ];
}

/// Closed form of the selected sum. Errors when |r| >= 1 (divergent).
pub fn geom_sum_closed(kind: GeomSumKind, r: f64) -> Result<f64, Error> {
    if !(r.abs() < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "geometric sums require |r| < 1, got {r}"
        )));
    }
    let one_minus = 1.0 - r;
    Ok(match kind {
        GeomSumKind::Plain => r / one_minus,
        GeomSumKind::Linear => r * (2.0 - r) / (one_minus * one_minus),
        GeomSumKind::Quadratic => r * (r * r - 3.0 * r + 4.0) / (one_minus * one_minus * one_minus),
        // -ln(1-r) - r via ln_1p for accuracy near r = 0
        GeomSumKind::ReciprocalN => -(-r).ln_1p() - r,
    })
}
