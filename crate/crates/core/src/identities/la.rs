//! Small vector helpers over `Scalar`.

use crate::model::AlgebraSpec;
use crate::scalar::{fmt_rational, rational_sqrt, Matrix, Scalar};

pub fn from_cols(cols: &[Vec<Scalar>]) -> Matrix {
    Matrix::from_fn(cols[0].len(), cols.len(), |i, j| cols[j][i].clone())
}

/// `u vᵀ`, so `outer(ξ, η)` is the operator `η⊗ξ`.
pub fn outer(u: &[Scalar], v: &[Scalar]) -> Matrix {
    Matrix::from_fn(u.len(), v.len(), |i, j| &u[i] * &v[j])
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(s: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| s * x).collect()
}

/// `xᵀ m y`.
pub fn form(m: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let my = m.mul_vec(y);
    x.iter()
        .zip(&my)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

/// A unit vector in `ker η` with its sign `ε = g(X,X)`.
#[derive(Clone, Debug)]
pub struct UnitVector {
    pub label: String,
    pub v: Vec<Scalar>,
    pub epsilon: i8,
}

/// Exactly normalizable vectors among `π(E_i)` and `π(E_i) ± π(E_j)`,
/// where `π X = X - η(X)ξ`. Null vectors and those whose norm is not a
/// rational square are skipped.
pub fn horizontal_units(spec: &AlgebraSpec) -> Vec<UnitVector> {
    let d = spec.dim();
    let xi = spec.xi();
    let proj = |i: usize| {
        let e = spec.basis(i);
        let eta = spec.eta_of(&e);
        let label = if eta.is_zero() {
            format!("E{}", i + 1)
        } else {
            format!("pi(E{})", i + 1)
        };
        (label, sub(&e, &scale(&eta, &xi)))
    };
    let mut candidates = Vec::new();
    for i in 0..d {
        candidates.push(proj(i));
    }
    for i in 0..d {
        for j in i + 1..d {
            let (li, vi) = proj(i);
            let (lj, vj) = proj(j);
            candidates.push((format!("{li}+{lj}"), add(&vi, &vj)));
            candidates.push((format!("{li}-{lj}"), sub(&vi, &vj)));
        }
    }
    let mut out: Vec<UnitVector> = Vec::new();
    for (label, v) in candidates {
        if v.iter().all(Scalar::is_zero) {
            continue;
        }
        let Some(norm) = spec.inner(&v, &v).as_rational() else {
            continue;
        };
        let eps: i8 = match norm.cmp(&num_traits::Zero::zero()) {
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => continue,
        };
        let abs = if eps > 0 { norm.clone() } else { -norm.clone() };
        let Some(root) = rational_sqrt(&abs) else {
            continue;
        };
        let s = Scalar::from_rational(root.clone());
        let unit: Vec<Scalar> = v.iter().map(|x| x / &s).collect();
        let parallel = out.iter().any(|u| {
            let neg: Vec<Scalar> = u.v.iter().map(|x| -x).collect();
            u.v == unit || neg == unit
        });
        if parallel {
            continue;
        }
        let label = if num_traits::One::is_one(&root) {
            label
        } else {
            format!("({label})/{}", fmt_rational(&root))
        };
        out.push(UnitVector {
            label,
            v: unit,
            epsilon: eps,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn units_of_the_standard_frame() {
        let units = horizontal_units(&fixtures::f2_star());
        let labels: Vec<&str> = units.iter().map(|u| u.label.as_str()).collect();
        // E1 ± E2 are null for diag(1,-1,1)
        assert_eq!(labels, vec!["E1", "E2"]);
        assert_eq!(units[1].epsilon, -1);
    }
}
