//! Structured (JSON) and plain-text renderings of reports.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::congruence::{CongruenceReport, Witness};
use crate::laurent::ExponentVector;
use crate::polytope::AdmissibilityReport;
use crate::unitroot::ZetaReport;

const SAFE: i64 = 1 << 53;

/// A JSON number when `|x| <= 2^53`, otherwise a decimal string.
pub fn json_int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if (-SAFE..=SAFE).contains(&v) => json!(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn json_uint(x: &BigUint) -> Value {
    json_int(&BigInt::from(x.clone()))
}

fn json_u64(x: u64) -> Value {
    json_int(&BigInt::from(x))
}

fn json_point(e: &ExponentVector) -> Value {
    Value::Array(e.entries().iter().map(|&x| json!(x)).collect())
}

pub fn sequence_json(b: &[BigInt]) -> Vec<Value> {
    b.iter()
        .enumerate()
        .map(|(n, x)| json!({ "n": n, "b": json_int(x) }))
        .collect()
}

pub fn admissibility_json(r: &AdmissibilityReport) -> Value {
    json!({
        "admissible": r.admissible,
        "vertices": r.vertices.iter().map(json_point).collect::<Vec<_>>(),
        "interior_points": r.interior_points.iter().map(json_point).collect::<Vec<_>>(),
        "explanation": r.explanation(),
    })
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Coefficient { power, lhs, rhs } => json!({
            "kind": "coefficient", "power": power, "lhs": json_int(lhs), "rhs": json_int(rhs),
        }),
        Witness::Index { n, lhs, rhs } => json!({
            "kind": "index", "n": json_u64(*n), "lhs": json_int(lhs), "rhs": json_int(rhs),
        }),
        Witness::Pair { n, m, lhs, rhs } => json!({
            "kind": "pair", "n": json_u64(*n), "m": json_u64(*m),
            "lhs": json_int(lhs), "rhs": json_int(rhs),
        }),
        Witness::Lemma {
            n,
            property,
            lhs,
            rhs,
        } => json!({
            "kind": "lemma", "n": json_u64(*n), "property": property.name(),
            "lhs": json_int(lhs), "rhs": json_int(rhs),
        }),
    }
}

/// Wall time is included only when `timings` is set, so that identical runs
/// render identically.
pub fn congruence_json(r: &CongruenceReport, timings: bool) -> Value {
    let p = &r.params;
    let mut v = json!({
        "check": r.check.name(),
        "params": {
            "p": json_u64(p.p),
            "s": p.s,
            "precision": p.precision,
            "N": p.cutoff.map(json_u64),
            "nmax": p.n_max.map(json_u64),
            "mmax": p.m_max.map(json_u64),
        },
        "passed": r.passed,
        "witness": r.witness.as_ref().map(witness_json),
        "comparisons": json_u64(r.comparisons),
        "admissible": r.admissible,
    });
    if timings {
        v["wall_time_ms"] = json!(r.elapsed.as_secs_f64() * 1e3);
    }
    v
}

pub fn zeta_json(r: &ZetaReport) -> Value {
    json!({
        "p": json_u64(r.p),
        "t": json_u64(r.t),
        "s": r.s,
        "smooth": r.smooth,
        "points": json_u64(r.points),
        "status": r.status.name(),
        "a_p": r.a_p,
        "hasse": r.hasse.map(|(a, f)| json!({
            "a_p_mod_p": a, "f1_t_mod_p": f, "holds": a == f,
        })),
        "in_domain": r.in_domain,
        "consistent": r.consistent(),
        "levels": r.levels.iter().map(|l| json!({
            "s": l.s,
            "unit_root": json_uint(&l.unit_root),
            "omega": json_uint(&l.omega),
            "agree": l.agree,
        })).collect::<Vec<_>>(),
        "passed": r.passed(),
    })
}

pub fn sequence_text(b: &[BigInt]) -> String {
    let parts: Vec<String> = b.iter().map(ToString::to_string).collect();
    parts.join(" ")
}

pub fn admissibility_text(r: &AdmissibilityReport) -> String {
    let pts = |v: &[ExponentVector]| -> String {
        if v.is_empty() {
            return "none".into();
        }
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!(
        "admissible: {}\nvertices: {}\ninterior points: {}\n",
        r.admissible,
        pts(&r.vertices),
        pts(&r.interior_points)
    );
    if !r.admissible {
        out.push_str(&r.explanation());
        out.push('\n');
    }
    out
}

pub fn congruence_text(r: &CongruenceReport, timings: bool) -> String {
    let p = &r.params;
    let mut params = vec![format!("p={}", p.p)];
    let opt = |name: &str, v: Option<u64>| v.map(|v| format!("{name}={v}"));
    params.extend(opt("s", p.s.map(u64::from)));
    params.extend(opt("K", p.precision.map(u64::from)));
    params.extend(opt("N", p.cutoff));
    params.extend(opt("nmax", p.n_max));
    params.extend(opt("mmax", p.m_max));
    let verdict = match &r.witness {
        None => "pass".to_string(),
        Some(w) => format!("FAIL at {w}"),
    };
    let mut out = format!(
        "{} {}: {} ({} comparisons)\n",
        r.check,
        params.join(" "),
        verdict,
        r.comparisons
    );
    if let Some(a) = r.admissible {
        out.push_str(&format!("admissible: {a}\n"));
    }
    if timings {
        out.push_str(&format!(
            "wall time: {:.3} ms\n",
            r.elapsed.as_secs_f64() * 1e3
        ));
    }
    out
}

pub fn zeta_table(reports: &[ZetaReport]) -> String {
    let Some(first) = reports.first() else {
        return String::new();
    };
    let modulus = format!("{}^{}", first.p, first.s);
    let header = [
        "t".to_string(),
        "smooth".into(),
        "points".into(),
        "a_p".into(),
        "status".into(),
        "hasse".into(),
        format!("u mod {modulus}"),
        format!("w_s mod {modulus}"),
        "agree".into(),
    ];
    let mut rows = vec![header.to_vec()];
    for r in reports {
        let dash = || "-".to_string();
        let top = r.levels.last();
        rows.push(vec![
            r.t.to_string(),
            r.smooth.to_string(),
            r.points.to_string(),
            r.a_p.map_or_else(dash, |a| a.to_string()),
            r.status.name().to_string(),
            r.hasse_holds()
                .map_or_else(dash, |h| if h { "ok".into() } else { "FAIL".into() }),
            top.map_or_else(dash, |l| l.unit_root.to_string()),
            top.map_or_else(dash, |l| l.omega.to_string()),
            if r.levels.is_empty() {
                dash()
            } else {
                r.levels.iter().all(|l| l.agree).to_string()
            },
        ]);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(json_int(&BigInt::from(SAFE)), json!(SAFE));
        assert_eq!(json_int(&BigInt::from(-SAFE)), json!(-SAFE));
        assert_eq!(json_int(&BigInt::from(SAFE + 1)), json!("9007199254740993"));
        let huge = BigInt::from(10).pow(30);
        assert_eq!(json_int(&huge), json!("1000000000000000000000000000000"));
    }
}
