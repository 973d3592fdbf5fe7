//! Instance verification of the curvature identities of paracontact metric
//! structures, with fits and equivalence tables.
//!
//! Most checks are identities that hold on every paracontact structure; on
//! a spec that is not paracontact a nonvanishing residual is reported as
//! `not-applicable` rather than as a failure. Statements
//! derived under an extra hypothesis are checked as implications and are
//! vacuously true when the hypothesis fails.

mod basic;
mod conditions;
mod dim3;
mod fits;
pub(crate) mod la;
mod prop3;

pub use basic::run_basic_identities;
pub use conditions::{
    check_condition, condition_residuals, condition_truth, constraint_extract, l_phi_residual, para_sasakian_residual,
    q_phi_residual, Condition,
};
pub use dim3::{check_dim3_pipeline, check_eq23_24, check_flatness_remark, check_phi_symmetry, check_prop43};
pub use fits::{eta_einstein_fit, k_nullity_fit, EtaEinsteinFit, NullityFit};
pub use prop3::{check_prop32, check_prop33};

use crate::check::{CheckResult, Residuals, Truth};
use crate::geometry::GeometryPack;
use crate::model::check_paracontact;

/// Shared state for one run: the pack and whether the spec is paracontact.
pub(crate) struct Ctx<'a> {
    pub pack: &'a GeometryPack,
    pub hp: bool,
    pub paracontact: Truth,
}

const NOT_PARACONTACT: &str = "requires a paracontact metric structure; the spec is not paracontact";

impl<'a> Ctx<'a> {
    pub fn new(pack: &'a GeometryPack) -> Self {
        let spec = pack.spec();
        let hp = spec.has_params();
        let mut res = Residuals::new();
        for r in check_paracontact(spec).residual {
            res.push(r.component, r.value);
        }
        Ctx {
            pack,
            hp,
            paracontact: res.truth(hp),
        }
    }

    pub fn truth(&self, res: &Residuals) -> Truth {
        res.truth(self.hp)
    }

    /// On a spec that is not paracontact a check only counts when it holds
    /// anyway; anything else is not applicable.
    fn gate(&self, r: CheckResult) -> CheckResult {
        if !self.paracontact.is_false() {
            return r;
        }
        if r.verdict == crate::check::Verdict::Holds {
            r.with_note("spec is not paracontact")
        } else {
            CheckResult::not_applicable(r.id, r.statement, NOT_PARACONTACT)
        }
    }

    /// An identity valid on every paracontact structure.
    pub fn identity(&self, id: &str, statement: &str, res: Residuals) -> CheckResult {
        if self.paracontact.is_false() {
            return self.gate(CheckResult::from_residuals(id, statement, res, self.hp));
        }
        CheckResult::implication(id, statement, &self.paracontact, res, self.hp)
    }

    /// A statement derived under `premise` (in addition to paracontact).
    pub fn under(&self, id: &str, statement: &str, premise: &Truth, res: Residuals) -> CheckResult {
        if self.paracontact.is_false() {
            return self.gate(CheckResult::implication(id, statement, premise, res, self.hp));
        }
        let full = self.paracontact.and(premise);
        CheckResult::implication(id, statement, &full, res, self.hp)
    }

    /// Biconditional between condition truths.
    pub fn equivalent(&self, id: &str, statement: &str, parts: &[(&str, Truth)]) -> CheckResult {
        self.gate(CheckResult::equivalence(id, statement, parts))
    }

    pub fn dim3_only(&self, id: &str, statement: &str) -> Option<CheckResult> {
        (self.pack.dim() != 3).then(|| {
            CheckResult::not_applicable(
                id,
                statement,
                format!("stated for dimension 3, spec has dimension {}", self.pack.dim()),
            )
        })
    }

    pub fn n(&self) -> i64 {
        self.pack.spec().n() as i64
    }
}

/// Every check of the suite, sorted by id.
pub fn run_identities(pack: &GeometryPack) -> Vec<CheckResult> {
    let mut out = run_basic_identities(pack);
    out.extend(check_prop32(pack));
    out.extend(check_prop33(pack));
    out.extend(check_dim3_pipeline(pack));
    out.extend(check_prop43(pack));
    out.extend(check_eq23_24(pack));
    out.push(check_phi_symmetry(pack));
    out.push(dim3::phi_symmetry_theorem(pack));
    out.push(check_flatness_remark(pack));
    out.extend(crate::oracle::bianchi_oracle(pack));
    out.extend(crate::oracle::engine_checks(pack));
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Verdict;
    use crate::fixtures;

    fn verdicts(pack: &GeometryPack) -> Vec<(String, Verdict)> {
        run_identities(pack).into_iter().map(|r| (r.id, r.verdict)).collect()
    }

    #[test]
    fn ids_are_unique_and_sorted() {
        let v = verdicts(&GeometryPack::compute(&fixtures::f2_star()));
        for w in v.windows(2) {
            assert!(w[0].0 < w[1].0, "{} then {}", w[0].0, w[1].0);
        }
    }

    #[test]
    fn abelian_is_not_paracontact() {
        let rs = run_identities(&GeometryPack::compute(&fixtures::abelian()));
        let eq5 = rs.iter().find(|r| r.id == "eq5.trl").unwrap();
        assert_eq!(eq5.verdict, Verdict::NotApplicable);
        let remark = rs.iter().find(|r| r.id == "remark42.flat").unwrap();
        assert_eq!(remark.verdict, Verdict::Holds);
        let flat = rs.iter().find(|r| r.id == "bianchi.first").unwrap();
        assert_eq!(flat.verdict, Verdict::Holds);
    }
}
