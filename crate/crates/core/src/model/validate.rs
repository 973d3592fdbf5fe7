//! Validation of the defining conditions of an almost paracontact metric
//! structure, and of the paracontact condition.

use thiserror::Error;

use super::spec::AlgebraSpec;
use crate::check::{CheckResult, Residuals};
use crate::scalar::{Matrix, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("metric has signature ({p},{q}); a compatible metric needs ({expected_p},{expected_q})")]
    Signature {
        p: usize,
        q: usize,
        expected_p: usize,
        expected_q: usize,
    },
    #[error("brackets violate the Jacobi identity: {0}")]
    Jacobi(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ValidateOptions {
    /// Report Jacobi residuals as constraints instead of failing hard.
    pub extract_jacobi: bool,
}

/// Components of `sum_cyclic [E_i,[E_j,E_k]]` for `i < j < k`.
pub fn jacobi_residuals(spec: &AlgebraSpec) -> Residuals {
    let d = spec.dim();
    let mut out = Residuals::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let cyc = [(i, j, k), (j, k, i), (k, i, j)];
                let mut sum = vec![Scalar::zero(); d];
                for (a, b, c) in cyc {
                    let inner = spec.bracket(b, c);
                    let outer = spec.bracket_vec(&spec.basis(a), &inner);
                    for (s, o) in sum.iter_mut().zip(outer) {
                        *s = &*s + &o;
                    }
                }
                out.push_vector(&format!("jacobi({},{},{})", i + 1, j + 1, k + 1), &sum);
            }
        }
    }
    out
}

fn outer(u: &[Scalar], v: &[Scalar]) -> Matrix {
    Matrix::from_fn(u.len(), v.len(), |i, j| &u[i] * &v[j])
}

/// Checks every algebraic condition of an almost paracontact metric
/// structure except the paracontact condition itself.
///
/// The signature gate and (by default) the Jacobi identity are hard errors;
/// everything else is reported as residual components.
pub fn validate_almost_paracontact(spec: &AlgebraSpec, opts: ValidateOptions) -> Result<CheckResult, ValidationError> {
    let d = spec.dim();
    let n = spec.n();
    let (p, q) = spec.metric().signature()?;
    if (p, q) != (n + 1, n) {
        return Err(ValidationError::Signature {
            p,
            q,
            expected_p: n + 1,
            expected_q: n,
        });
    }

    let mut res = Residuals::new();
    let jacobi = jacobi_residuals(spec);
    if !jacobi.is_empty() {
        if opts.extract_jacobi {
            res.extend(jacobi);
        } else {
            let text = jacobi
                .as_slice()
                .iter()
                .map(|r| format!("{} = {}", r.component, r.value))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(ValidationError::Jacobi(text));
        }
    }

    let phi = spec.phi();
    let xi = spec.xi();
    let eta = spec.eta();
    let g = spec.metric();

    res.push("eta(xi) - 1", &spec.eta_of(&xi) - &Scalar::one());
    res.push_vector("phi(xi)", &phi.mul_vec(&xi));
    let eta_phi: Vec<Scalar> = (0..d).map(|j| (0..d).map(|k| &eta[k] * &phi[(k, j)]).sum()).collect();
    res.push_vector("eta o phi", &eta_phi);
    let phi2 = phi * phi;
    let phi2_res = phi2.sub(&Matrix::identity(d)).add(&outer(&xi, &eta));
    res.push_matrix("phi^2 - id + eta(x)xi", &phi2_res);
    // g(phi X, phi Y) + g(X, Y) - eta(X) eta(Y)
    let compat = (&(&phi.transpose() * g) * phi).add(g).sub(&outer(&eta, &eta));
    res.push_matrix("g(phi.,phi.) + g - eta(x)eta", &compat);
    let g_xi = g.mul_vec(&xi);
    let diff: Vec<Scalar> = eta.iter().zip(&g_xi).map(|(a, b)| a - b).collect();
    res.push_vector("eta - g(.,xi)", &diff);

    Ok(CheckResult::from_residuals(
        "structure.almost_paracontact",
        "phi(xi)=0, eta o phi=0, eta(xi)=1, phi^2=id-eta(x)xi, g(phi X,phi Y)=-g(X,Y)+eta(X)eta(Y), eta=g(.,xi)",
        res,
        spec.has_params(),
    ))
}

/// `d eta(E_i, E_j) = -1/2 eta([E_i, E_j])` for constant frame coefficients.
pub fn d_eta(spec: &AlgebraSpec) -> Matrix {
    let d = spec.dim();
    let half = Scalar::from_ratio(-1, 2);
    Matrix::from_fn(d, d, |i, j| &spec.eta_of(&spec.bracket(i, j)) * &half)
}

/// Residual of `g(X, phi Y) = d eta(X, Y)` on frame pairs.
pub fn paracontact_residual(spec: &AlgebraSpec) -> Matrix {
    let g_phi = spec.metric() * spec.phi();
    g_phi.sub(&d_eta(spec))
}

pub fn check_paracontact(spec: &AlgebraSpec) -> CheckResult {
    let mut res = Residuals::new();
    res.push_matrix("g(.,phi .) - d eta", &paracontact_residual(spec));
    CheckResult::from_residuals(
        "structure.paracontact",
        "g(X,phi Y) = d eta(X,Y)",
        res,
        spec.has_params(),
    )
}
