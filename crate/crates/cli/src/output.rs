//! Output shaping for the eval and check subcommands: 12-significant-digit
//! text, and the JSON objects documented in docs/cli-json-schema.json.

use serde::Serialize;

use qbessel::{
    alpha_threshold, convolution_r0_verdict, corollary_flags, hadamard_sup_bound, hardy_classify,
    kappa_closed_bound, p0_alpha_bound, p0_condition, positivity_condition, ConditionId,
    ConditionReport, FamilyKind, GeomProperty, HardyMembership, QDomain,
};
use qbessel::hardy::convolution_hypothesis;

/// 12 significant digits, scientific notation. Deterministic across
/// platforms and worker counts.
pub fn fmt_sig(x: f64) -> String {
    format!("{x:.11e}")
}

#[derive(Debug, Serialize)]
pub struct EvalOutput {
    pub command: &'static str,
    pub kind: &'static str,
    pub q: f64,
    pub nu: f64,
    pub z: [f64; 2],
    pub which: &'static str,
    pub value: [f64; 2],
    pub error_bound: f64,
}

#[derive(Debug, Serialize)]
pub struct CondOut {
    pub id: &'static str,
    pub lhs: Option<f64>,
    pub holds: bool,
}

impl CondOut {
    fn from_report(r: ConditionReport) -> Self {
        CondOut {
            id: r.id.name(),
            lhs: (!r.lhs_value.is_nan()).then_some(r.lhs_value),
            holds: r.holds,
        }
    }

    fn unavailable(id: ConditionId) -> Self {
        CondOut {
            id: id.name(),
            lhs: None,
            holds: false,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ThresholdOut {
    pub value: f64,
    pub direction_valid: bool,
    /// Set when the value exceeds the admissible order interval [0,1); the
    /// usable order is then min(value, 1).
    pub clipped_to_one: bool,
}

#[derive(Debug, Serialize)]
pub struct HardyOut {
    pub kind: &'static str,
    pub exponent: Option<f64>,
    pub basis: Option<&'static str>,
}

impl HardyOut {
    fn from_membership(m: HardyMembership) -> Self {
        match m {
            HardyMembership::FiniteExponent { exponent, basis } => HardyOut {
                kind: "finite-exponent",
                exponent: Some(exponent),
                basis: Some(basis.name()),
            },
            HardyMembership::Infinity { basis } => HardyOut {
                kind: "infinity",
                exponent: None,
                basis: Some(basis.name()),
            },
            HardyMembership::Unclassified => HardyOut {
                kind: "unclassified",
                exponent: None,
                basis: None,
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HadamardOut {
    pub hypothesis_holds: bool,
    pub hypothesis_lhs: f64,
    pub sup_bound: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct R0Out {
    pub hypothesis_holds: bool,
    pub gamma: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct CheckOutput {
    pub command: &'static str,
    pub kind: &'static str,
    pub q: f64,
    pub nu: f64,
    pub alpha: f64,
    pub beta: f64,
    pub conditions: Vec<CondOut>,
    pub alpha_star_starlike: Option<ThresholdOut>,
    pub alpha_star_convex: Option<ThresholdOut>,
    pub p0_bound: Option<f64>,
    pub hardy: HardyOut,
    pub hadamard: HadamardOut,
    pub r0_product: R0Out,
}

fn bound_cond(kind: FamilyKind, property: GeomProperty, qd: &QDomain, alpha: f64) -> CondOut {
    match kappa_closed_bound(kind, property, qd, alpha) {
        Ok(r) => CondOut::from_report(r),
        Err(_) => CondOut::unavailable(match (kind, property) {
            (FamilyKind::Second, GeomProperty::Starlike) => ConditionId::StarlikeBound2,
            (FamilyKind::Second, GeomProperty::Convex) => ConditionId::ConvexBound2,
            (FamilyKind::Third, GeomProperty::Starlike) => ConditionId::StarlikeBound3,
            (FamilyKind::Third, GeomProperty::Convex) => ConditionId::ConvexBound3,
        }),
    }
}

fn threshold_out(kind: FamilyKind, property: GeomProperty, qd: &QDomain) -> Option<ThresholdOut> {
    alpha_threshold(kind, property, qd).ok().map(|t| ThresholdOut {
        value: t.value,
        direction_valid: t.direction_valid,
        clipped_to_one: t.direction_valid && t.value > 1.0,
    })
}

impl CheckOutput {
    pub fn collect(kind: FamilyKind, qd: &QDomain, alpha: f64, beta: f64) -> Self {
        let cor = corollary_flags(qd);
        let conditions = vec![
            CondOut::from_report(positivity_condition(FamilyKind::Second, qd)),
            CondOut::from_report(positivity_condition(FamilyKind::Third, qd)),
            bound_cond(FamilyKind::Second, GeomProperty::Starlike, qd, alpha),
            bound_cond(FamilyKind::Second, GeomProperty::Convex, qd, alpha),
            bound_cond(FamilyKind::Third, GeomProperty::Starlike, qd, alpha),
            bound_cond(FamilyKind::Third, GeomProperty::Convex, qd, alpha),
            CondOut::from_report(
                p0_condition(FamilyKind::Second, qd, alpha).expect("alpha validated"),
            ),
            CondOut::from_report(
                p0_condition(FamilyKind::Third, qd, alpha).expect("alpha validated"),
            ),
            CondOut::from_report(cor[0]),
            CondOut::from_report(cor[1]),
            CondOut::from_report(cor[2]),
            CondOut::from_report(cor[3]),
        ];
        let hadamard_hyp = convolution_hypothesis(kind, qd);
        let r0_hyp = p0_alpha_bound(kind, qd)
            .map(|t| alpha < t.value)
            .unwrap_or(false);
        CheckOutput {
            command: "check",
            kind: kind.label(),
            q: qd.q(),
            nu: qd.nu(),
            alpha,
            beta,
            conditions,
            alpha_star_starlike: threshold_out(kind, GeomProperty::Starlike, qd),
            alpha_star_convex: threshold_out(kind, GeomProperty::Convex, qd),
            p0_bound: p0_alpha_bound(kind, qd).ok().map(|t| t.value),
            // a series that cannot be built within the truncation budget
            // cannot be classified; that is a verdict, not a crash
            hardy: HardyOut::from_membership(
                hardy_classify(kind, qd, alpha).unwrap_or(HardyMembership::Unclassified),
            ),
            hadamard: HadamardOut {
                hypothesis_holds: hadamard_hyp.holds,
                hypothesis_lhs: hadamard_hyp.lhs_value,
                sup_bound: hadamard_sup_bound(kind, qd).ok(),
            },
            r0_product: R0Out {
                hypothesis_holds: r0_hyp,
                gamma: convolution_r0_verdict(kind, qd, alpha, beta)
                    .ok()
                    .map(|c| c.gamma),
            },
        }
    }

    pub fn print_table(&self) {
        println!(
            "certificates for {}(q = {}, nu = {}) at alpha = {}, beta = {}",
            self.kind,
            fmt_sig(self.q),
            fmt_sig(self.nu),
            fmt_sig(self.alpha),
            fmt_sig(self.beta)
        );
        println!("{:<16} {:>22} verdict", "condition", "lhs");
        for c in &self.conditions {
            let lhs = c.lhs.map(fmt_sig).unwrap_or_default();
            println!(
                "{:<16} {:>22} {}",
                c.id,
                lhs,
                if c.holds { "holds" } else { "fails" }
            );
        }
        let fmt_threshold = |t: &Option<ThresholdOut>| match t {
            Some(t) if t.direction_valid => {
                let clip = if t.clipped_to_one { " (clipped to 1)" } else { "" };
                format!("{}{clip}", fmt_sig(t.value))
            }
            Some(t) => format!("{} (direction invalid)", fmt_sig(t.value)),
            None => "unavailable".into(),
        };
        println!("alpha* starlike  = {}", fmt_threshold(&self.alpha_star_starlike));
        println!("alpha* convex    = {}", fmt_threshold(&self.alpha_star_convex));
        println!(
            "p0 order bound   = {}",
            self.p0_bound.map(fmt_sig).unwrap_or("unavailable".into())
        );
        match (self.hardy.kind, self.hardy.exponent, self.hardy.basis) {
            ("finite-exponent", Some(p), Some(b)) => {
                println!("hardy            = H^{} [{}]", fmt_sig(p), b);
            }
            ("infinity", _, Some(b)) => println!("hardy            = H^inf [{}]", b),
            _ => println!("hardy            = unclassified"),
        }
        match self.hadamard.sup_bound {
            Some(b) => println!(
                "hadamard product = bounded, sup <= {} (assumes f has Re f' > 0)",
                fmt_sig(b)
            ),
            None => println!(
                "hadamard product = not certified (hypothesis lhs = {})",
                fmt_sig(self.hadamard.hypothesis_lhs)
            ),
        }
        match self.r0_product.gamma {
            Some(g) => println!(
                "r0 product       = Re (h*f)' > {} (assumes f' in P0(beta))",
                fmt_sig(g)
            ),
            None => println!("r0 product       = not certified"),
        }
    }
}
