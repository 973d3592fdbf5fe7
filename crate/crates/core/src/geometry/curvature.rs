//! Riemann tensor and its contractions.

use crate::model::{AlgebraSpec, Slot, Tensor};
use crate::scalar::{Matrix, Scalar};

/// `riemann[l][i][j][k] = R^l_{ijk}` with
/// `R(E_i,E_j)E_k = ∇_{E_i}∇_{E_j}E_k - ∇_{E_j}∇_{E_i}E_k - ∇_{[E_i,E_j]}E_k`.
pub fn riemann(spec: &AlgebraSpec, gamma: &Tensor) -> Tensor {
    let d = spec.dim();
    Tensor::from_fn(d, vec![Slot::Up, Slot::Down, Slot::Down, Slot::Down], |ix| {
        let (l, i, j, k) = (ix[0], ix[1], ix[2], ix[3]);
        let mut acc = Scalar::zero();
        for m in 0..d {
            let a = gamma.get(&[m, j, k]);
            if !a.is_zero() {
                acc = &acc + &(a * gamma.get(&[l, i, m]));
            }
            let b = gamma.get(&[m, i, k]);
            if !b.is_zero() {
                acc = &acc - &(b * gamma.get(&[l, j, m]));
            }
            let c = spec.c(m, i, j);
            if !c.is_zero() {
                acc = &acc - &(c * gamma.get(&[l, m, k]));
            }
        }
        acc
    })
}

/// `R_{ijkl} = g(R(E_i,E_j)E_k, E_l)`.
pub fn lower_riemann(riemann: &Tensor, g: &Matrix) -> Tensor {
    let d = riemann.dim();
    Tensor::from_fn(d, vec![Slot::Down; 4], |ix| {
        (0..d)
            .filter(|&p| !g[(p, ix[3])].is_zero())
            .map(|p| riemann.get(&[p, ix[0], ix[1], ix[2]]) * &g[(p, ix[3])])
            .sum()
    })
}

/// `Ric(E_j, E_k) = Σ_i R^i_{ijk}`, the trace of `Z ↦ R(Z, E_j)E_k`.
pub fn ricci(riemann: &Tensor) -> Matrix {
    let d = riemann.dim();
    Matrix::from_fn(d, d, |j, k| (0..d).map(|i| riemann.get(&[i, i, j, k]).clone()).sum())
}

/// `l E_j = R(E_j, ξ)ξ` as an operator matrix.
pub fn l_operator(riemann: &Tensor, xi: &[Scalar]) -> Matrix {
    let d = riemann.dim();
    Matrix::from_fn(d, d, |l, j| {
        let mut acc = Scalar::zero();
        for a in 0..d {
            if xi[a].is_zero() {
                continue;
            }
            for b in 0..d {
                if xi[b].is_zero() {
                    continue;
                }
                acc = &acc + &(&(&xi[a] * &xi[b]) * riemann.get(&[l, j, a, b]));
            }
        }
        acc
    })
}

/// `R(x, y)z` for frame-component vectors.
pub fn apply(riemann: &Tensor, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
    let d = riemann.dim();
    let mut out = vec![Scalar::zero(); d];
    for i in (0..d).filter(|&i| !x[i].is_zero()) {
        for j in (0..d).filter(|&j| !y[j].is_zero()) {
            let xy = &x[i] * &y[j];
            for k in (0..d).filter(|&k| !z[k].is_zero()) {
                let w = &xy * &z[k];
                for (l, o) in out.iter_mut().enumerate() {
                    let r = riemann.get(&[l, i, j, k]);
                    if !r.is_zero() {
                        *o = &*o + &(r * &w);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::koszul_connection;

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn example_ricci_at_beta_zero() {
        let spec = fixtures::f1_with_metric(&[1, -1, 1]);
        let r = riemann(&spec, &koszul_connection(&spec));
        // Ric = 2g - 4 eta (x) eta
        assert_eq!(ricci(&r), Matrix::diag(vec![int(2), int(-2), int(-2)]));
        assert_eq!(l_operator(&r, &spec.xi()), Matrix::diag(vec![int(-1), int(-1), int(0)]));
    }

    #[test]
    fn riemann_symmetries_on_witness() {
        let spec = fixtures::f2_star();
        let low = lower_riemann(&riemann(&spec, &koszul_connection(&spec)), spec.metric());
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let v = low.get(&[i, j, k, l]);
                        assert_eq!(v, &-low.get(&[j, i, k, l]));
                        assert_eq!(v, &-low.get(&[i, j, l, k]));
                        assert_eq!(v, low.get(&[k, l, i, j]));
                    }
                }
            }
        }
    }
}
