//! The scan subcommand: evaluate every certificate on a (q, nu) grid and
//! write one CSV row per point, deterministically.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use qbessel::{
    alpha_threshold, corollary_flags, hardy_classify, kappa_closed_bound, p0_alpha_bound,
    p0_condition, positivity_condition, FamilyKind, GeomProperty, QDomain, Tolerance,
};

use crate::output::fmt_sig;
use crate::Failure;

/// Fixed column order; the flag columns follow the condition-id list.
const HEADER: &str = "q,nu,Positivity2,Positivity3,StarlikeBound2,ConvexBound2,\
StarlikeBound3,ConvexBound3,P0Bound2,P0Bound3,CorI,CorII,CorIII,CorVI,\
alpha_star_starlike,alpha_star_convex,p0_bound,hardy_basis";

fn parse_range(spec: &str, what: &str) -> Result<(f64, f64), Failure> {
    let Some((lo, hi)) = spec.split_once(':') else {
        return Err(Failure::Validation(format!(
            "{what} range must be lo:hi, got {spec}"
        )));
    };
    let lo: f64 = lo
        .parse()
        .map_err(|e| Failure::Validation(format!("bad {what} range start: {e}")))?;
    let hi: f64 = hi
        .parse()
        .map_err(|e| Failure::Validation(format!("bad {what} range end: {e}")))?;
    if !(lo <= hi) {
        return Err(Failure::Validation(format!(
            "{what} range start must not exceed end, got {spec}"
        )));
    }
    Ok((lo, hi))
}

fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect()
}

/// One CSV row. Flags are certificates at alpha = 0; the threshold columns
/// are per-family critical orders, left empty when the positivity hypothesis
/// fails or the rearrangement direction is invalid.
fn row(kind: FamilyKind, qd: &QDomain) -> String {
    let mut cols: Vec<String> = vec![fmt_sig(qd.q()), fmt_sig(qd.nu())];
    let pos2 = positivity_condition(FamilyKind::Second, qd);
    let pos3 = positivity_condition(FamilyKind::Third, qd);
    let bound_flag = |kind, property| {
        kappa_closed_bound(kind, property, qd, 0.0)
            .map(|r| r.holds)
            .unwrap_or(false)
    };
    let flags = [
        pos2.holds,
        pos3.holds,
        bound_flag(FamilyKind::Second, GeomProperty::Starlike),
        bound_flag(FamilyKind::Second, GeomProperty::Convex),
        bound_flag(FamilyKind::Third, GeomProperty::Starlike),
        bound_flag(FamilyKind::Third, GeomProperty::Convex),
        p0_condition(FamilyKind::Second, qd, 0.0)
            .map(|r| r.holds)
            .unwrap_or(false),
        p0_condition(FamilyKind::Third, qd, 0.0)
            .map(|r| r.holds)
            .unwrap_or(false),
    ];
    cols.extend(flags.iter().map(|b| b.to_string()));
    cols.extend(corollary_flags(qd).iter().map(|r| r.holds.to_string()));

    let threshold_col = |property| match alpha_threshold(kind, property, qd) {
        Ok(t) if t.direction_valid => fmt_sig(t.value),
        _ => String::new(),
    };
    cols.push(threshold_col(GeomProperty::Starlike));
    cols.push(threshold_col(GeomProperty::Convex));
    cols.push(
        p0_alpha_bound(kind, qd)
            .map(|t| fmt_sig(t.value))
            .unwrap_or_default(),
    );
    cols.push(
        hardy_classify(kind, qd, 0.0)
            .map(|m| m.basis_name().to_string())
            .unwrap_or_else(|_| "unclassified".into()),
    );
    cols.join(",")
}

pub fn cmd_scan(
    kind: FamilyKind,
    q_spec: &str,
    nu_spec: &str,
    steps: usize,
    out: &Path,
    _tol: &Tolerance,
    json: bool,
) -> Result<(), Failure> {
    let (q_lo, q_hi) = parse_range(q_spec, "q")?;
    let (nu_lo, nu_hi) = parse_range(nu_spec, "nu")?;
    if !(q_lo > 0.0 && q_hi < 1.0) {
        return Err(Failure::Validation(format!(
            "q range must lie inside (0,1), got {q_spec}"
        )));
    }
    if !(nu_lo > -1.0) {
        return Err(Failure::Validation(format!(
            "nu range must lie inside (-1, inf), got {nu_spec}"
        )));
    }
    if steps < 2 {
        return Err(Failure::Validation(format!(
            "steps must be >= 2, got {steps}"
        )));
    }

    // points in (q, nu) lexicographic order; generation order is row order
    let points: Vec<QDomain> = grid(q_lo, q_hi, steps)
        .into_iter()
        .flat_map(|q| {
            grid(nu_lo, nu_hi, steps)
                .into_iter()
                .map(move |nu| QDomain::new(q, nu).expect("validated range"))
        })
        .collect();

    let rows: Vec<String> = points.par_iter().map(|qd| row(kind, qd)).collect();

    let mut text = String::with_capacity(rows.len() * 128);
    text.push_str(HEADER);
    text.push('\n');
    for r in &rows {
        text.push_str(r);
        text.push('\n');
    }
    let mut file = std::fs::File::create(out)
        .map_err(|e| Failure::Io(format!("cannot create {}: {e}", out.display())))?;
    file.write_all(text.as_bytes())
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", out.display())))?;

    if json {
        let value = serde_json::json!({
            "command": "scan",
            "kind": kind.label(),
            "q": [q_lo, q_hi],
            "nu": [nu_lo, nu_hi],
            "steps": steps,
            "rows": rows.len(),
            "out": out.display().to_string(),
        });
        println!("{value}");
    } else {
        println!("wrote {} rows to {}", rows.len(), out.display());
    }
    Ok(())
}
