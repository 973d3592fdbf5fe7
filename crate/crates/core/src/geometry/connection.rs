//! Levi-Civita connection of a left-invariant metric.

use crate::model::{AlgebraSpec, Slot, Tensor};
use crate::scalar::Scalar;

/// `g([E_a, E_b], E_d)`.
fn bracket_lowered(spec: &AlgebraSpec, a: usize, b: usize, d: usize) -> Scalar {
    let g = spec.metric();
    (0..spec.dim())
        .filter(|&l| !g[(l, d)].is_zero())
        .map(|l| spec.c(l, a, b) * &g[(l, d)])
        .sum()
}

/// Connection coefficients `gamma[k][i][j] = Γ^k_{ij}`, `∇_{E_i} E_j = Γ^k_{ij} E_k`,
/// from the Koszul formula for left-invariant fields:
///
/// `2 g(∇_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)`.
pub fn koszul_connection(spec: &AlgebraSpec) -> Tensor {
    let d = spec.dim();
    let half = Scalar::from_ratio(1, 2);
    let g_inv = spec.metric_inverse();
    let mut lowered = vec![Scalar::zero(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let v =
                    bracket_lowered(spec, i, j, k) - bracket_lowered(spec, j, k, i) + bracket_lowered(spec, k, i, j);
                lowered[(i * d + j) * d + k] = &v * &half;
            }
        }
    }
    Tensor::from_fn(d, vec![Slot::Up, Slot::Down, Slot::Down], |ix| {
        let (m, i, j) = (ix[0], ix[1], ix[2]);
        (0..d)
            .filter(|&k| !g_inv[(m, k)].is_zero())
            .map(|k| &g_inv[(m, k)] * &lowered[(i * d + j) * d + k])
            .sum()
    })
}

/// `Γ^k_{ij} - Γ^k_{ji} - c^k_{ij}`; zero for a torsion-free connection.
pub fn torsion_residual(spec: &AlgebraSpec, gamma: &Tensor) -> Tensor {
    let d = spec.dim();
    Tensor::from_fn(d, vec![Slot::Up, Slot::Down, Slot::Down], |ix| {
        let (k, i, j) = (ix[0], ix[1], ix[2]);
        gamma.get(&[k, i, j]) - gamma.get(&[k, j, i]) - spec.c(k, i, j).clone()
    })
}

/// `g_{lk} Γ^l_{ij} + g_{jl} Γ^l_{ik}`, indexed `[i][j][k]`; zero when the
/// connection preserves the (frame-constant) metric.
pub fn metric_compat_residual(spec: &AlgebraSpec, gamma: &Tensor) -> Tensor {
    let d = spec.dim();
    let g = spec.metric();
    Tensor::from_fn(d, vec![Slot::Down, Slot::Down, Slot::Down], |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        (0..d)
            .map(|l| &(&g[(l, k)] * gamma.get(&[l, i, j])) + &(&g[(j, l)] * gamma.get(&[l, i, k])))
            .sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Params;

    /// `∇_{E_i} E_j` as a component vector.
    fn nabla(gamma: &Tensor, i: usize, j: usize) -> Vec<Scalar> {
        (0..3).map(|k| gamma.get(&[k, i, j]).clone()).collect()
    }

    fn v(a: Scalar, b: Scalar, c: Scalar) -> Vec<Scalar> {
        vec![a, b, c]
    }

    #[test]
    fn example_koszul_table() {
        let spec = fixtures::f1_minus2();
        let gamma = koszul_connection(&spec);
        let p = Params::new(["beta"]);
        let beta = Scalar::param(&p, 0);
        let z = Scalar::zero;
        let one = Scalar::one;
        let m1 = || Scalar::from_int(-1);
        let mb1 = || -(&beta + &Scalar::one());
        let expected = [
            [v(z(), z(), z()), v(z(), z(), m1()), v(z(), m1(), z())],
            [v(z(), z(), one()), v(z(), z(), z()), v(m1(), z(), z())],
            [v(z(), mb1(), z()), v(mb1(), z(), z()), v(z(), z(), z())],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(nabla(&gamma, i, j), expected[i][j], "nabla_E{} E{}", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn witness_koszul_table() {
        let gamma = koszul_connection(&fixtures::f2_star());
        let z = Scalar::zero;
        let h = |n| Scalar::from_ratio(n, 2);
        assert_eq!(nabla(&gamma, 0, 1), v(z(), z(), h(-1)));
        assert_eq!(nabla(&gamma, 1, 2), v(h(-3), z(), z()));
        assert_eq!(nabla(&gamma, 2, 0), v(z(), h(-3), z()));
        for i in 0..3 {
            assert!(nabla(&gamma, i, i).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn abelian_connection_vanishes() {
        assert!(koszul_connection(&fixtures::abelian()).is_zero());
    }

    #[test]
    fn torsion_free_and_metric() {
        for spec in [fixtures::f1_symbolic(), fixtures::f2_symbolic(), fixtures::abelian()] {
            let gamma = koszul_connection(&spec);
            assert!(torsion_residual(&spec, &gamma).is_zero());
            assert!(metric_compat_residual(&spec, &gamma).is_zero());
        }
    }
}
