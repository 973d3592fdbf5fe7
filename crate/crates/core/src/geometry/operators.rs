//! The operators built from the Reeb field: `τ = £_ξ g`, `h = ½ £_ξ φ`.

use crate::model::AlgebraSpec;
use crate::scalar::{Matrix, Scalar};

/// `τ(E_i, E_j) = -g([ξ,E_i], E_j) - g(E_i, [ξ,E_j])` (frame-constant `g`).
pub fn tau(spec: &AlgebraSpec) -> Matrix {
    let d = spec.dim();
    let xi = spec.xi();
    let ad: Vec<Vec<Scalar>> = (0..d).map(|i| spec.bracket_vec(&xi, &spec.basis(i))).collect();
    Matrix::from_fn(d, d, |i, j| {
        -(spec.inner(&ad[i], &spec.basis(j)) + spec.inner(&spec.basis(i), &ad[j]))
    })
}

/// `£_ξ φ`, column `j` being `[ξ, φE_j] - φ[ξ, E_j]`.
pub fn lie_xi_phi(spec: &AlgebraSpec) -> Matrix {
    let d = spec.dim();
    let xi = spec.xi();
    let phi = spec.phi();
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|j| {
            let phi_ej: Vec<Scalar> = (0..d).map(|k| phi[(k, j)].clone()).collect();
            let a = spec.bracket_vec(&xi, &phi_ej);
            let b = phi.mul_vec(&spec.bracket_vec(&xi, &spec.basis(j)));
            a.iter().zip(&b).map(|(x, y)| x - y).collect()
        })
        .collect();
    Matrix::from_fn(d, d, |i, j| cols[j][i].clone())
}

pub fn h_operator(spec: &AlgebraSpec) -> Matrix {
    lie_xi_phi(spec).scale(&Scalar::from_ratio(1, 2))
}

/// `½ g^{ik} g^{jl} τ_{ij} τ_{kl}`; signed, since `g` is indefinite.
pub fn c_squared(tau: &Matrix, g_inv: &Matrix) -> Scalar {
    let raised = g_inv * tau;
    let full = &raised * &raised;
    &full.trace() * &Scalar::from_ratio(1, 2)
}

/// `|A|² = tr(A* A)` with `A* = g⁻¹ Aᵀ g` the metric adjoint of an operator.
pub fn operator_norm2(a: &Matrix, g: &Matrix, g_inv: &Matrix) -> Scalar {
    let adj = &(g_inv * &a.transpose()) * g;
    (&adj * a).trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example_family_has_h_zero() {
        let spec = fixtures::f1_minus2();
        assert!(h_operator(&spec).is_zero());
        assert!(tau(&spec).is_zero());
    }

    #[test]
    fn witness_h_and_tau() {
        let spec = fixtures::f2_star();
        let h = h_operator(&spec);
        assert_eq!(
            h,
            Matrix::diag(vec![
                Scalar::from_ratio(1, 2),
                Scalar::from_ratio(-1, 2),
                Scalar::zero()
            ])
        );
        let t = tau(&spec);
        let g_inv = spec.metric_inverse();
        // tr h² = ¼|£_ξφ|² = -¼|£_ξg|²
        let trh2 = (&h * &h).trace();
        assert_eq!(trh2, Scalar::from_ratio(1, 2));
        let lie = lie_xi_phi(&spec);
        assert_eq!(
            &operator_norm2(&lie, spec.metric(), g_inv) * &Scalar::from_ratio(1, 4),
            trh2
        );
        let tau_norm = &c_squared(&t, g_inv) * &Scalar::from_int(2);
        assert_eq!(&tau_norm * &Scalar::from_ratio(-1, 4), trh2);
    }
}
