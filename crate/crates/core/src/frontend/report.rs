use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use super::print_spec;
use crate::check::{CheckResult, Truth, Verdict};
use crate::geometry::GeometryPack;
use crate::identities::{eta_einstein_fit, k_nullity_fit};
use crate::model::{AlgebraSpec, ConstraintSet};
use crate::scalar::Rational;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub manifold: String,
    pub version: String,
    /// The normalized spec in the input DSL.
    pub spec: String,
    pub invariants: BTreeMap<String, String>,
    pub checks: Vec<CheckResult>,
}

/// `scal`, `trl`, `trh2`, `c2`, plus `a`, `b` and `k` when the fits succeed.
pub fn invariants(pack: &GeometryPack) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("scal".into(), pack.scal.to_string());
    m.insert("trl".into(), pack.trl.to_string());
    m.insert("trh2".into(), pack.trh2.to_string());
    m.insert("c2".into(), pack.c2.to_string());
    let fit = eta_einstein_fit(pack);
    if fit.truth == Truth::True {
        m.insert("a".into(), fit.a.to_string());
        m.insert("b".into(), fit.b.to_string());
    }
    let k = k_nullity_fit(pack);
    if k.truth == Truth::True {
        m.insert("k".into(), k.k.to_string());
    }
    m
}

impl Report {
    pub fn new(spec: &AlgebraSpec, pack: &GeometryPack, checks: Vec<CheckResult>) -> Report {
        Report {
            manifold: spec.name().to_string(),
            version: ENGINE_VERSION.to_string(),
            spec: print_spec(spec),
            invariants: invariants(pack),
            checks,
        }
    }

    /// Exit status: 2 if any check fails, else 3 if any is conditional, else 0.
    pub fn exit_code(&self) -> i32 {
        exit_code(&self.checks)
    }
}

pub fn exit_code(checks: &[CheckResult]) -> i32 {
    if checks.iter().any(|c| c.verdict == Verdict::Fails) {
        2
    } else if checks.iter().any(|c| c.verdict == Verdict::Conditional) {
        3
    } else {
        0
    }
}

fn constraints_json(c: &ConstraintSet) -> Value {
    Value::Array(c.generator_strings().into_iter().map(Value::String).collect())
}

pub fn check_json(c: &CheckResult) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), json!(c.id));
    m.insert("statement".into(), json!(c.statement));
    m.insert("verdict".into(), json!(c.verdict.as_str()));
    m.insert(
        "residual".into(),
        Value::Array(
            c.residual
                .iter()
                .map(|r| json!({"component": r.component, "value": r.value.to_string()}))
                .collect(),
        ),
    );
    m.insert("constraints".into(), constraints_json(&c.constraints));
    if let Some(p) = &c.premise {
        m.insert("premise".into(), constraints_json(p));
    }
    if let Some(n) = &c.note {
        m.insert("note".into(), json!(n));
    }
    Value::Object(m)
}

pub fn report_json(r: &Report) -> Value {
    json!({
        "header": {"tool": "pcm", "version": r.version},
        "manifold": r.manifold,
        "spec": r.spec,
        "invariants": r.invariants,
        "checks": r.checks.iter().map(check_json).collect::<Vec<_>>(),
    })
}

/// Canonical JSON (sorted keys, two-space indent, trailing newline) or a
/// plain-text table.
pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(r)).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => report_text(r),
    }
}

fn report_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "manifold {}  (pcm {})", r.manifold, r.version);
    if !r.invariants.is_empty() {
        let _ = writeln!(s, "\ninvariants");
        for (k, v) in &r.invariants {
            let _ = writeln!(s, "  {k:<6} {v}");
        }
    }
    if !r.checks.is_empty() {
        let width = r.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let _ = writeln!(s, "\nchecks");
        for c in &r.checks {
            let _ = writeln!(s, "  {:<14} {:<width$}  {}", c.verdict.as_str(), c.id, c.statement);
            if c.verdict == Verdict::Conditional {
                let _ = writeln!(s, "  {:<14} {:<width$}  on {}", "", "", c.constraints);
            }
            if c.verdict == Verdict::Fails {
                for res in c.residual.iter().take(4) {
                    let _ = writeln!(s, "  {:<14} {:<width$}  {} = {}", "", "", res.component, res.value);
                }
            }
            if let Some(n) = &c.note {
                let _ = writeln!(s, "  {:<14} {:<width$}  ({n})", "", "");
            }
        }
        let count = |v: Verdict| r.checks.iter().filter(|c| c.verdict == v).count();
        let _ = writeln!(
            s,
            "\n{} holds, {} fails, {} conditional, {} not applicable",
            count(Verdict::Holds),
            count(Verdict::Fails),
            count(Verdict::Conditional),
            count(Verdict::NotApplicable)
        );
    }
    s
}

/// Parses `name=value` with `value` an integer or `p/q`.
pub fn parse_assignment(s: &str) -> Result<(String, Rational), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let r = crate::scalar::parse_rational(value).ok_or_else(|| format!("`{value}` is not a rational number"))?;
    Ok((name.trim().to_string(), r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn reference_invariants() {
        let spec = fixtures::f1_with_metric(&[1, -1, 1]);
        let r = Report::new(&spec, &GeometryPack::compute(&spec), Vec::new());
        let v = report_json(&r);
        assert_eq!(
            v["invariants"],
            json!({"scal":"2","trl":"-2","a":"2","b":"-4","k":"-1","c2":"0","trh2":"0"})
        );
        assert_eq!(v["checks"], json!([]));
    }

    #[test]
    fn witness_invariants_have_no_fits() {
        let spec = fixtures::f2_star();
        let inv = invariants(&GeometryPack::compute(&spec));
        assert_eq!(inv["trl"], "-3/2");
        assert_eq!(inv["trh2"], "1/2");
        assert!(!inv.contains_key("a") && !inv.contains_key("b") && !inv.contains_key("k"));
    }

    #[test]
    fn keys_are_sorted() {
        let spec = fixtures::f2_star();
        let pack = GeometryPack::compute(&spec);
        let r = Report::new(&spec, &pack, crate::oracle::engine_checks(&pack));
        let text = emit_report(&r, Format::Json);
        let checks = text.find("\"checks\"").unwrap();
        let header = text.find("\"header\"").unwrap();
        let manifold = text.find("\"manifold\"").unwrap();
        assert!(checks < header && header < manifold);
        assert_eq!(emit_report(&r, Format::Json), text);
    }

    #[test]
    fn assignments() {
        assert_eq!(
            parse_assignment("beta=-3/2").unwrap().1,
            Rational::new((-3).into(), 2.into())
        );
        assert!(parse_assignment("beta").is_err());
        assert!(parse_assignment("beta=x").is_err());
    }
}
