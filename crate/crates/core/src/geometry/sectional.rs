//! ξ-sectional and φ-sectional curvature of unit horizontal vectors.

use thiserror::Error;

use super::GeometryPack;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionalKind {
    Xi,
    Phi,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SectionalError {
    #[error("degenerate plane: g(X,X) = 0")]
    Degenerate,
    #[error("X is not horizontal: eta(X) = {0}")]
    NotHorizontal(String),
    #[error("X is not a unit vector: g(X,X) = {0}")]
    NotUnit(String),
    #[error("|X| = {x} and |phi X| = {phi_x} do not satisfy |X| = -|phi X|")]
    PhiNorm { x: String, phi_x: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionalResult {
    pub kind: SectionalKind,
    /// The plane is spanned by `x` and `y` (`y` is `ξ` or `φx`).
    pub x: Vec<Scalar>,
    pub y: Vec<Scalar>,
    /// `ε_X = g(X,X)`.
    pub epsilon: i8,
    pub value: Scalar,
}

fn unit_sign(norm: &Scalar) -> Result<i8, SectionalError> {
    if norm.is_zero() {
        Err(SectionalError::Degenerate)
    } else if norm.is_one() {
        Ok(1)
    } else if (-norm).is_one() {
        Ok(-1)
    } else {
        Err(SectionalError::NotUnit(norm.to_string()))
    }
}

fn horizontal_unit(pack: &GeometryPack, x: &[Scalar]) -> Result<i8, SectionalError> {
    let spec = pack.spec();
    let eta = spec.eta_of(x);
    if !eta.is_zero() {
        return Err(SectionalError::NotHorizontal(eta.to_string()));
    }
    unit_sign(&spec.inner(x, x))
}

/// `K(ξ, X) = ε_X R(X, ξ, ξ, X)`.
pub fn xi_sectional(pack: &GeometryPack, x: &[Scalar]) -> Result<SectionalResult, SectionalError> {
    let epsilon = horizontal_unit(pack, x)?;
    let xi = pack.spec().xi();
    let value = &pack.r4(x, &xi, &xi, x) * &Scalar::from_int(epsilon.into());
    Ok(SectionalResult {
        kind: SectionalKind::Xi,
        x: x.to_vec(),
        y: xi,
        epsilon,
        value,
    })
}

/// `K(X, φX) = -R(X, φX, φX, X)` for `|X| = -|φX| = ±1`.
pub fn phi_sectional(pack: &GeometryPack, x: &[Scalar]) -> Result<SectionalResult, SectionalError> {
    let epsilon = horizontal_unit(pack, x)?;
    let spec = pack.spec();
    let phi_x = spec.phi().mul_vec(x);
    let phi_norm = spec.inner(&phi_x, &phi_x);
    if phi_norm != Scalar::from_int((-epsilon).into()) {
        return Err(SectionalError::PhiNorm {
            x: epsilon.to_string(),
            phi_x: phi_norm.to_string(),
        });
    }
    let value = -pack.r4(x, &phi_x, &phi_x, x);
    Ok(SectionalResult {
        kind: SectionalKind::Phi,
        x: x.to_vec(),
        y: phi_x,
        epsilon,
        value,
    })
}

pub fn sectional(pack: &GeometryPack, x: &[Scalar], kind: SectionalKind) -> Result<SectionalResult, SectionalError> {
    match kind {
        SectionalKind::Xi => xi_sectional(pack, x),
        SectionalKind::Phi => phi_sectional(pack, x),
    }
}
