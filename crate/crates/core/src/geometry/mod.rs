//! Levi-Civita connection, curvature and the Reeb-field operators of a
//! structure-constant model, computed exactly in the given frame.

mod connection;
mod curvature;
mod derivative;
mod operators;
mod sectional;

pub use connection::{koszul_connection, metric_compat_residual, torsion_residual};
pub use curvature::{l_operator, lower_riemann, ricci, riemann};
pub use derivative::{covariant_derivative, covariant_derivative_frame, full_covariant_derivative};
pub use operators::{c_squared, h_operator, lie_xi_phi, operator_norm2, tau};
pub use sectional::{phi_sectional, sectional, xi_sectional, SectionalError, SectionalKind, SectionalResult};

use crate::model::{d_eta, AlgebraSpec, Tensor};
use crate::scalar::{Matrix, Scalar};

/// Everything derived from one spec. Built once, never mutated.
#[derive(Clone, Debug)]
pub struct GeometryPack {
    spec: AlgebraSpec,
    /// `gamma[k][i][j] = Γ^k_{ij}`.
    pub gamma: Tensor,
    /// `riemann[l][i][j][k] = R^l_{ijk}`.
    pub riemann: Tensor,
    /// `riemann_lowered[i][j][k][l] = g(R(E_i,E_j)E_k, E_l)`.
    pub riemann_lowered: Tensor,
    pub ricci: Matrix,
    /// Ricci operator `Q = g⁻¹ Ric`.
    pub q: Matrix,
    pub scal: Scalar,
    pub l: Matrix,
    pub trl: Scalar,
    pub tau: Matrix,
    pub h: Matrix,
    pub d_eta: Matrix,
    pub c2: Scalar,
    pub trh2: Scalar,
    pub nabla_xi_phi: Matrix,
    pub nabla_xi_h: Matrix,
    pub nabla_xi_tau: Matrix,
    pub nabla_xi_l: Matrix,
    /// `nabla_r[m][i][j][k][l] = (∇_{E_m} R)_{ijkl}`.
    pub nabla_r: Tensor,
}

impl GeometryPack {
    pub fn compute(spec: &AlgebraSpec) -> GeometryPack {
        let g = spec.metric();
        let g_inv = spec.metric_inverse();
        let xi = spec.xi();
        let gamma = koszul_connection(spec);
        let riemann = riemann(spec, &gamma);
        let riemann_lowered = lower_riemann(&riemann, g);
        let ricci = ricci(&riemann);
        let q = g_inv * &ricci;
        let scal = q.trace();
        let l = l_operator(&riemann, &xi);
        let trl = l.trace();
        let tau = tau(spec);
        let h = h_operator(spec);
        let c2 = c_squared(&tau, g_inv);
        let trh2 = (&h * &h).trace();
        let along_xi = |m: &Matrix| covariant_derivative(&gamma, &Tensor::operator(m), &xi).to_matrix();
        let nabla_xi_phi = along_xi(spec.phi());
        let nabla_xi_h = along_xi(&h);
        let nabla_xi_l = along_xi(&l);
        let nabla_xi_tau = covariant_derivative(&gamma, &Tensor::bilinear(&tau), &xi).to_matrix();
        let nabla_r = full_covariant_derivative(&gamma, &riemann_lowered);
        GeometryPack {
            spec: spec.clone(),
            gamma,
            riemann,
            riemann_lowered,
            ricci,
            q,
            scal,
            l,
            trl,
            tau,
            h,
            d_eta: d_eta(spec),
            c2,
            trh2,
            nabla_xi_phi,
            nabla_xi_h,
            nabla_xi_tau,
            nabla_xi_l,
            nabla_r,
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    /// `∇_x y` for frame-component vectors.
    pub fn nabla(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for i in (0..d).filter(|&i| !x[i].is_zero()) {
            for j in (0..d).filter(|&j| !y[j].is_zero()) {
                let w = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.gamma.get(&[k, i, j]);
                    if !c.is_zero() {
                        *o = &*o + &(c * &w);
                    }
                }
            }
        }
        out
    }

    /// `R(x, y)z`.
    pub fn curvature(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        curvature::apply(&self.riemann, x, y, z)
    }

    /// `R(x, y, z, w) = g(R(x,y)z, w)`.
    pub fn r4(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar], w: &[Scalar]) -> Scalar {
        self.spec.inner(&self.curvature(x, y, z), w)
    }

    /// `(∇_w R)(x, y)z` as a vector.
    pub fn nabla_curvature(&self, w: &[Scalar], x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let g_inv = self.spec.metric_inverse();
        // lowered components (∇_w R)(x,y,z,E_l), then raise l
        let low: Vec<Scalar> = (0..d)
            .map(|l| {
                let mut acc = Scalar::zero();
                for m in (0..d).filter(|&m| !w[m].is_zero()) {
                    for i in (0..d).filter(|&i| !x[i].is_zero()) {
                        for j in (0..d).filter(|&j| !y[j].is_zero()) {
                            for k in (0..d).filter(|&k| !z[k].is_zero()) {
                                let c = self.nabla_r.get(&[m, i, j, k, l]);
                                if !c.is_zero() {
                                    acc = &acc + &(c * &(&(&w[m] * &x[i]) * &(&y[j] * &z[k])));
                                }
                            }
                        }
                    }
                }
                acc
            })
            .collect();
        g_inv.mul_vec(&low)
    }
}
