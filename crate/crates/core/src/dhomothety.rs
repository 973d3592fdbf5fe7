//! D-homothetic deformations `ḡ = αg + βη⊗η`, `ξ̄ = ξ/α`, `η̄ = αη`,
//! `φ̄ = φ` with `β = α(α-1)`, kept in the original frame.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::check::{CheckResult, Residuals};
use crate::geometry::GeometryPack;
use crate::identities::la::outer;
use crate::model::{check_paracontact, validate_almost_paracontact, AlgebraSpec, SpecError};
use crate::scalar::{fmt_rational, Matrix, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DHomothetyError {
    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DHomothetyParams {
    alpha: Rational,
    beta: Rational,
}

impl DHomothetyParams {
    pub fn new(alpha: Rational) -> Result<Self, DHomothetyError> {
        if !alpha.is_positive() {
            return Err(DHomothetyError::NonPositiveAlpha(fmt_rational(&alpha)));
        }
        let beta = &alpha * (&alpha - Rational::one());
        Ok(DHomothetyParams { alpha, beta })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Parameters of the inverse deformation.
    pub fn inverse(&self) -> DHomothetyParams {
        DHomothetyParams::new(self.alpha.recip()).expect("1/alpha is positive")
    }
}

fn eta_eta(spec: &AlgebraSpec) -> Matrix {
    let eta = spec.eta();
    outer(&eta, &eta)
}

pub fn apply(spec: &AlgebraSpec, p: &DHomothetyParams) -> Result<AlgebraSpec, DHomothetyError> {
    let alpha = Scalar::from_rational(p.alpha.clone());
    let beta = Scalar::from_rational(p.beta.clone());
    let g = spec.metric().scale(&alpha).add(&eta_eta(spec).scale(&beta));
    let xi = spec.xi_rational().iter().map(|x| x / &p.alpha).collect();
    let eta = spec.eta_rational().iter().map(|x| x * &p.alpha).collect();
    let name = if p.alpha.is_one() {
        spec.name().to_string()
    } else {
        format!("{}-dh{}", spec.name(), fmt_rational(&p.alpha).replace('/', "_"))
    };
    Ok(spec.with_structure(name, g, xi, eta)?)
}

/// Recomputes the deformed geometry and checks the Ricci law, the `trl` law,
/// invariance of `Qξ = (trl)ξ` and that the result is paracontact.
pub fn verify_transform_laws(spec: &AlgebraSpec, p: &DHomothetyParams) -> Result<Vec<CheckResult>, DHomothetyError> {
    let bar = apply(spec, p)?;
    let hp = spec.has_params();
    let before = GeometryPack::compute(spec);
    let after = GeometryPack::compute(&bar);
    let n = spec.n() as i64;
    let alpha = Scalar::from_rational(p.alpha.clone());
    let beta = Scalar::from_rational(p.beta.clone());
    let two = Scalar::from_int(2);
    let mut out = Vec::new();

    // Ric̄ = Ric + 2(β/α)g - 2(β/α²)((2n+1)α + nβ) η⊗η
    let c_g = &two * &(&beta / &alpha);
    let c_ee = -(&(&two * &(&beta / &(&alpha * &alpha)))
        * &(&(&Scalar::from_int(2 * n + 1) * &alpha) + &(&Scalar::from_int(n) * &beta)));
    let law = before
        .ricci
        .add(&spec.metric().scale(&c_g))
        .add(&eta_eta(spec).scale(&c_ee));
    let mut r = Residuals::new();
    r.push_matrix("Ric_bar - law", &after.ricci.sub(&law));
    out.push(
        CheckResult::from_residuals(
            "dhomothety.ricci_law",
            "Ric_bar = Ric + 2(beta/alpha)g - 2(beta/alpha^2)((2n+1)alpha + n beta) eta x eta",
            r,
            hp,
        )
        .with_note(format!("Ric_bar = Ric + ({c_g})g + ({c_ee}) eta x eta")),
    );

    let a2 = &alpha * &alpha;
    let trl_law = &(&before.trl - &(&Scalar::from_int(2 * n) * &(&a2 - &Scalar::one()))) / &a2;
    let mut r = Residuals::new();
    r.push("trl_bar - law", &after.trl - &trl_law);
    out.push(
        CheckResult::from_residuals("dhomothety.trl_law", "trl_bar = (trl - 2n(alpha^2 - 1))/alpha^2", r, hp)
            .with_note(format!("trl = {}, trl_bar = {}", before.trl, after.trl)),
    );

    let qxi = |pk: &GeometryPack| {
        let xi = pk.spec().xi();
        let qx = pk.q.mul_vec(&xi);
        let mut r = Residuals::new();
        let v: Vec<Scalar> = qx.iter().zip(&xi).map(|(a, x)| a - &(&pk.trl * x)).collect();
        r.push_vector("Q xi - trl xi", &v);
        r
    };
    out.push(CheckResult::implication(
        "dhomothety.q_xi_invariant",
        "Q xi = trl xi implies Q_bar xi_bar = trl_bar xi_bar",
        &qxi(&before).truth(hp),
        qxi(&after),
        hp,
    ));

    let mut pc = check_paracontact(&bar);
    pc.id = "dhomothety.paracontact".into();
    if let Ok(v) = validate_almost_paracontact(&bar, Default::default()) {
        if !v.holds_exactly() && !hp {
            pc = CheckResult::fails(pc.id, pc.statement, "deformed structure is not almost paracontact");
        }
    }
    out.push(pc);
    Ok(out)
}

/// Applies `α` then `1/α` and compares `g`, `Γ`, `R` and `Ric` with the
/// original.
pub fn round_trip(spec: &AlgebraSpec, p: &DHomothetyParams) -> Result<CheckResult, DHomothetyError> {
    let back = apply(&apply(spec, p)?, &p.inverse())?;
    let a = GeometryPack::compute(spec);
    let b = GeometryPack::compute(&back);
    let mut r = Residuals::new();
    r.push_matrix("g", &back.metric().sub(spec.metric()));
    r.push_tensor("Gamma", &b.gamma.sub(&a.gamma));
    r.push_tensor("R", &b.riemann.sub(&a.riemann));
    r.push_matrix("Ric", &b.ricci.sub(&a.ricci));
    let xi_same = back.xi_rational() == spec.xi_rational() && back.eta_rational() == spec.eta_rational();
    if !xi_same {
        r.push("xi, eta", Scalar::one());
    }
    Ok(CheckResult::from_residuals(
        "dhomothety.round_trip",
        "the deformation by 1/alpha undoes the deformation by alpha",
        r,
        spec.has_params(),
    ))
}

/// Whether `α = 1`, in which case `apply` is the identity.
pub fn is_trivial(p: &DHomothetyParams) -> bool {
    p.alpha.is_one() && p.beta.is_zero()
}
