use num_traits::{One, Signed, Zero};

use crate::model::AlgebraSpec;
use crate::scalar::{fmt_rational, Matrix, Rational, Scalar};

/// A coefficient as a signed magnitude ready for `c * eK`.
fn coefficient(s: &Scalar) -> (bool, String) {
    if let Some(r) = s.as_rational() {
        return (r.is_negative(), fmt_rational(&r.abs()));
    }
    let text = s.to_string();
    if s.is_polynomial() && s.numer().num_terms() == 1 {
        match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        }
    } else {
        (false, format!("({text})"))
    }
}

fn linear_combination(coefs: &[Scalar], basis: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (k, c) in coefs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (neg, mag) = coefficient(c);
        let term = if mag == "1" {
            basis(k)
        } else {
            format!("{mag} * {}", basis(k))
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&term),
            (true, true) => {
                out.push('-');
                out.push_str(&term);
            }
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn rationals(v: &[Rational]) -> Vec<Scalar> {
    v.iter().cloned().map(Scalar::from).collect()
}

fn metric_line(g: &Matrix) -> String {
    let d = g.rows();
    let entry = |i: usize, j: usize| g[(i, j)].to_string();
    let diagonal = (0..d).all(|i| (0..d).all(|j| i == j || g[(i, j)].is_zero()));
    if diagonal {
        let v: Vec<String> = (0..d).map(|i| entry(i, i)).collect();
        format!("diag({})", v.join(", "))
    } else {
        let rows: Vec<String> = (0..d)
            .map(|i| (0..d).map(|j| entry(i, j)).collect::<Vec<_>>().join(", "))
            .collect();
        format!("rows({})", rows.join("; "))
    }
}

/// Writes a spec in the input DSL. Brackets are listed for `i < j` when
/// nonzero, every `phi` column is listed and `eta` is always explicit.
pub fn print_spec(spec: &AlgebraSpec) -> String {
    let d = spec.dim();
    let mut lines = vec![format!("manifold \"{}\" {{", spec.name()), format!("  dim {d}")];
    if spec.has_params() {
        lines.push(format!("  params [{}]", spec.params().names().join(", ")));
    }
    lines.push(format!("  metric {}", metric_line(spec.metric())));
    let e = |k: usize| format!("e{}", k + 1);
    for i in 0..d {
        for j in i + 1..d {
            let v = spec.bracket(i, j);
            if v.iter().any(|s| !s.is_zero()) {
                lines.push(format!(
                    "  bracket [{},{}] = {}",
                    i + 1,
                    j + 1,
                    linear_combination(&v, e)
                ));
            }
        }
    }
    for j in 0..d {
        let col: Vec<Scalar> = (0..d).map(|k| spec.phi()[(k, j)].clone()).collect();
        lines.push(format!("  phi e{} = {}", j + 1, linear_combination(&col, e)));
    }
    lines.push(format!(
        "  xi = {}",
        linear_combination(&rationals(spec.xi_rational()), e)
    ));
    let eta = spec.eta_rational();
    let unit = eta.iter().filter(|x| !x.is_zero()).count() == 1 && eta.iter().any(|x| x.is_one());
    let dual = |k: usize| format!("dual(e{})", k + 1);
    let eta_text = if unit {
        dual(eta.iter().position(|x| x.is_one()).expect("unit"))
    } else {
        linear_combination(&rationals(eta), dual)
    };
    lines.push(format!("  eta = {eta_text}"));
    lines.push("}".to_string());
    let mut out = lines.join("\n");
    out.push('\n');
    out
}
