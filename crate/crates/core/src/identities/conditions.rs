//! Named geometric conditions as residual systems, and the constraint sets
//! they induce on the parameters.

use std::fmt;
use std::str::FromStr;

use super::fits::{eta_einstein_fit, k_nullity_fit};
use crate::check::{CheckResult, Residuals, Truth};
use crate::geometry::{covariant_derivative_frame, GeometryPack};
use crate::model::{paracontact_residual, AlgebraSpec, ConstraintSet, Slot, Tensor};
use crate::scalar::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    Paracontact,
    QPhiCommute,
    EtaEinstein,
    KNullity,
    ParaSasakian,
    HZero,
    Flat,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::Paracontact,
        Condition::QPhiCommute,
        Condition::EtaEinstein,
        Condition::KNullity,
        Condition::ParaSasakian,
        Condition::HZero,
        Condition::Flat,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Paracontact => "paracontact",
            Condition::QPhiCommute => "q-phi-commute",
            Condition::EtaEinstein => "eta-einstein",
            Condition::KNullity => "k-nullity",
            Condition::ParaSasakian => "para-sasakian",
            Condition::HZero => "h-zero",
            Condition::Flat => "flat",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Condition::Paracontact => "g(X,phi Y) = d eta(X,Y)",
            Condition::QPhiCommute => "Q phi = phi Q",
            Condition::EtaEinstein => "Q = a id + b eta(x)xi",
            Condition::KNullity => "R(X,Y)xi = k(eta(Y)X - eta(X)Y)",
            Condition::ParaSasakian => "(nabla_X phi)Y = -g(X,Y)xi + eta(Y)X",
            Condition::HZero => "h = 0",
            Condition::Flat => "R = 0",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Condition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Condition::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| {
            let names: Vec<_> = Condition::ALL.iter().map(|c| c.as_str()).collect();
            format!("unknown condition `{s}` (expected one of {})", names.join(", "))
        })
    }
}

pub fn q_phi_residual(pack: &GeometryPack) -> Matrix {
    let phi = pack.spec().phi();
    (&pack.q * phi).sub(&(phi * &pack.q))
}

pub fn l_phi_residual(pack: &GeometryPack) -> Matrix {
    let phi = pack.spec().phi();
    (&pack.l * phi).sub(&(phi * &pack.l))
}

/// `(∇_{E_i}φ)E_j + g(E_i,E_j)ξ - η(E_j)E_i`, indexed `[k][i][j]`.
pub fn para_sasakian_residual(pack: &GeometryPack) -> Tensor {
    let spec = pack.spec();
    let d = spec.dim();
    let phi = Tensor::operator(spec.phi());
    let nabla_phi: Vec<Matrix> = (0..d)
        .map(|i| covariant_derivative_frame(&pack.gamma, &phi, i).to_matrix())
        .collect();
    let g = spec.metric();
    let xi = spec.xi();
    let eta = spec.eta();
    Tensor::from_fn(d, vec![Slot::Up, Slot::Down, Slot::Down], |ix| {
        let (k, i, j) = (ix[0], ix[1], ix[2]);
        let mut v = nabla_phi[i][(k, j)].clone() + &g[(i, j)] * &xi[k];
        if k == i {
            v = &v - &eta[j];
        }
        v
    })
}

/// Residual components whose common vanishing is the condition.
pub fn condition_residuals(pack: &GeometryPack, cond: Condition) -> Residuals {
    let mut res = Residuals::new();
    match cond {
        Condition::Paracontact => res.push_matrix("g(.,phi .) - d eta", &paracontact_residual(pack.spec())),
        Condition::QPhiCommute => res.push_matrix("Q phi - phi Q", &q_phi_residual(pack)),
        Condition::EtaEinstein => res.extend(eta_einstein_fit(pack).residuals()),
        Condition::KNullity => res.extend(k_nullity_fit(pack).residuals()),
        Condition::ParaSasakian => res.push_tensor("(nabla phi) + g xi - eta id", &para_sasakian_residual(pack)),
        Condition::HZero => res.push_matrix("h", &pack.h),
        Condition::Flat => res.push_tensor("R", &pack.riemann),
    }
    res
}

pub fn condition_truth(pack: &GeometryPack, cond: Condition) -> Truth {
    match cond {
        Condition::EtaEinstein => eta_einstein_fit(pack).truth,
        Condition::KNullity => k_nullity_fit(pack).truth,
        _ => condition_residuals(pack, cond).truth(pack.spec().has_params()),
    }
}

pub fn check_condition(pack: &GeometryPack, cond: Condition) -> CheckResult {
    let hp = pack.spec().has_params();
    let id = format!("condition.{}", cond.as_str());
    match cond {
        Condition::EtaEinstein | Condition::KNullity => {
            let truth = condition_truth(pack, cond);
            let res = condition_residuals(pack, cond);
            let mut r = CheckResult::from_residuals(id, cond.statement(), res, hp);
            if let Truth::Conditional(c) = truth {
                r.constraints = c;
            }
            r
        }
        _ => CheckResult::from_residuals(id, cond.statement(), condition_residuals(pack, cond), hp),
    }
}

/// Normalized numerators of the condition's residual. Empty means the
/// condition holds identically; a constant generator means it never holds.
pub fn constraint_extract(spec: &AlgebraSpec, cond: Condition) -> ConstraintSet {
    if cond == Condition::Paracontact {
        let mut res = Residuals::new();
        res.push_matrix("", &paracontact_residual(spec));
        return ConstraintSet::from_residuals(res.as_slice().iter().map(|r| &r.value));
    }
    let pack = GeometryPack::compute(spec);
    match condition_truth(&pack, cond) {
        Truth::True => ConstraintSet::empty(),
        Truth::Conditional(c) => c,
        Truth::False => {
            let res = condition_residuals(&pack, cond);
            ConstraintSet::from_residuals(res.as_slice().iter().map(|r| &r.value))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn paracontact_constraint_on_example() {
        let set = constraint_extract(&fixtures::f1_symbolic(), Condition::Paracontact);
        assert_eq!(set.generator_strings(), vec!["alpha + 2"]);
    }

    #[test]
    fn example_is_not_flat() {
        let set = constraint_extract(&fixtures::f1_with_metric(&[1, -1, 1]), Condition::Flat);
        assert!(set.is_inconsistent());
        assert!(constraint_extract(&fixtures::abelian(), Condition::Flat).is_empty());
    }

    #[test]
    fn para_sasakian_matches_h_zero_in_dim_three() {
        for spec in [fixtures::f1_minus2(), fixtures::f2_star()] {
            let pack = GeometryPack::compute(&spec);
            assert_eq!(
                condition_truth(&pack, Condition::ParaSasakian).is_true(),
                condition_truth(&pack, Condition::HZero).is_true()
            );
        }
        let pack = GeometryPack::compute(&fixtures::f2_symbolic());
        let set = match condition_truth(&pack, Condition::HZero) {
            Truth::Conditional(c) => c,
            other => panic!("expected conditional, got {other:?}"),
        };
        assert_eq!(set.generator_strings(), vec!["b - c"]);
    }

    #[test]
    fn names_round_trip() {
        for c in Condition::ALL {
            assert_eq!(c.as_str().parse::<Condition>().unwrap(), c);
        }
        assert!("nope".parse::<Condition>().is_err());
    }
}
