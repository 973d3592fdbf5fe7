use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::OracleError;
use crate::check::{CheckResult, Verdict};
use crate::geometry::GeometryPack;
use crate::identities::{check_condition, run_identities, Condition};
use crate::model::{check_paracontact, AlgebraSpec, ConstraintSet};
use crate::scalar::Rational;

/// Runs one check by id: `paracontact`, a condition name, `condition.<name>`
/// or any id of the identity suite.
pub fn run_check(spec: &AlgebraSpec, id: &str) -> Result<CheckResult, OracleError> {
    Ok(run_checks(spec, &[id])?.remove(0))
}

/// Like [`run_check`] for several ids, sharing the geometry and the suite.
pub fn run_checks(spec: &AlgebraSpec, ids: &[&str]) -> Result<Vec<CheckResult>, OracleError> {
    let mut pack = None;
    let mut suite: Option<Vec<CheckResult>> = None;
    let mut out = Vec::with_capacity(ids.len());
    for &id in ids {
        if id == "paracontact" || id == "structure.paracontact" {
            out.push(check_paracontact(spec));
            continue;
        }
        let pack = pack.get_or_insert_with(|| GeometryPack::compute(spec));
        let cond = id.strip_prefix("condition.").unwrap_or(id);
        if let Ok(c) = cond.parse::<Condition>() {
            out.push(check_condition(pack, c));
            continue;
        }
        let found = suite
            .get_or_insert_with(|| run_identities(pack))
            .iter()
            .find(|r| r.id == id)
            .cloned()
            .ok_or_else(|| OracleError::UnknownCheck(id.to_string()))?;
        out.push(found);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct PointOutcome {
    pub point: Vec<(String, Rational)>,
    pub verdict: Verdict,
    /// What the symbolic verdict predicts here; `None` when it cannot say.
    pub expected: Option<Verdict>,
    pub agrees: bool,
}

#[derive(Clone, Debug)]
pub struct SubstitutionReport {
    pub check_id: String,
    pub symbolic: Verdict,
    pub points: Vec<PointOutcome>,
    pub rejected: usize,
}

impl SubstitutionReport {
    pub fn all_agree(&self) -> bool {
        self.points.iter().all(|p| p.agrees)
    }
}

fn vanishes_at(set: &ConstraintSet, values: &[Rational]) -> bool {
    set.generators()
        .iter()
        .all(|p| num_traits::Zero::is_zero(&p.eval(values)))
}

/// The symbolic verdict specialized to a point, when determined by it.
/// Undetermined points only need a decided verdict.
fn predict(sym: &CheckResult, values: &[Rational]) -> Option<Verdict> {
    match sym.verdict {
        // off the premise the conclusion may not vanish; gating then decides
        Verdict::Holds => match &sym.premise {
            Some(p) if !vanishes_at(p, values) => None,
            _ => Some(Verdict::Holds),
        },
        Verdict::Fails => Some(Verdict::Fails),
        Verdict::NotApplicable => Some(Verdict::NotApplicable),
        Verdict::Conditional => match &sym.premise {
            Some(p) if !vanishes_at(p, values) => Some(Verdict::Holds),
            Some(_) => None,
            None if sym.residual.is_empty() => None,
            None => Some(if vanishes_at(&sym.constraints, values) {
                Verdict::Holds
            } else {
                Verdict::Fails
            }),
        },
    }
}

fn sample(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(-9..=9);
    let d: i64 = rng.gen_range(1..=9);
    Rational::new(n.into(), d.into())
}

/// Evaluates `check_id` at `trials` random rational parameter points and
/// compares each verdict with the specialization of the symbolic one.
/// Points where the spec's entries have a vanishing denominator are redrawn,
/// up to ten times the trial count.
pub fn random_substitution_check(
    spec: &AlgebraSpec,
    check_id: &str,
    trials: usize,
    seed: u64,
) -> Result<SubstitutionReport, OracleError> {
    Ok(random_substitution_checks(spec, &[check_id], trials, seed)?.remove(0))
}

/// [`random_substitution_check`] for several ids over the same points.
pub fn random_substitution_checks(
    spec: &AlgebraSpec,
    check_ids: &[&str],
    trials: usize,
    seed: u64,
) -> Result<Vec<SubstitutionReport>, OracleError> {
    if !spec.has_params() {
        return Err(OracleError::NoParameters);
    }
    let symbolic = run_checks(spec, check_ids)?;
    let names = spec.params().names().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports: Vec<SubstitutionReport> = symbolic
        .iter()
        .map(|r| SubstitutionReport {
            check_id: r.id.clone(),
            symbolic: r.verdict,
            points: Vec::new(),
            rejected: 0,
        })
        .collect();
    let mut accepted = 0;
    let mut rejected = 0;
    let max_draws = trials.max(1) * 10;
    while accepted < trials && accepted + rejected < max_draws {
        let values: Vec<Rational> = names.iter().map(|_| sample(&mut rng)).collect();
        let assignment: Vec<(String, Rational)> = names.iter().cloned().zip(values.iter().cloned()).collect();
        let Ok(at) = spec.specialize(&assignment) else {
            rejected += 1;
            continue;
        };
        accepted += 1;
        let here = run_checks(&at, check_ids)?;
        for ((rep, sym), r) in reports.iter_mut().zip(&symbolic).zip(here) {
            let expected = predict(sym, &values);
            let agrees = match expected {
                Some(Verdict::NotApplicable) => matches!(r.verdict, Verdict::NotApplicable | Verdict::Holds),
                Some(e) => e == r.verdict,
                None => r.verdict != Verdict::Conditional,
            };
            rep.points.push(PointOutcome {
                point: assignment.clone(),
                verdict: r.verdict,
                expected,
                agrees,
            });
        }
    }
    if accepted == 0 {
        return Err(OracleError::DegenerateSampling(rejected));
    }
    for rep in &mut reports {
        rep.rejected = rejected;
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn holds_everywhere_on_the_family() {
        let rep = random_substitution_check(&fixtures::f1_minus2(), "lemma31.f4", 20, 7).unwrap();
        assert_eq!(rep.symbolic, Verdict::Holds);
        assert_eq!(rep.points.len(), 20);
        assert!(rep.points.iter().all(|p| p.verdict == Verdict::Holds));
    }

    #[test]
    fn paracontact_tracks_alpha() {
        let rep = random_substitution_check(&fixtures::f1_symbolic(), "paracontact", 20, 3).unwrap();
        assert_eq!(rep.symbolic, Verdict::Conditional);
        assert!(rep.all_agree());
        for p in &rep.points {
            let alpha = &p.point[0].1;
            let expect = if *alpha == Rational::from_integer((-2).into()) {
                Verdict::Holds
            } else {
                Verdict::Fails
            };
            assert_eq!(p.verdict, expect);
        }
    }

    #[test]
    fn conditional_condition_specializes() {
        let rep = random_substitution_check(&fixtures::f2_symbolic(), "h-zero", 20, 11).unwrap();
        assert!(rep.all_agree());
    }

    #[test]
    fn batch_matches_single_runs() {
        let ids = ["paracontact", "eq5.trl", "h-zero"];
        let batch = random_substitution_checks(&fixtures::f1_symbolic(), &ids, 5, 2).unwrap();
        for (id, rep) in ids.iter().zip(&batch) {
            let single = random_substitution_check(&fixtures::f1_symbolic(), id, 5, 2).unwrap();
            let verdicts = |r: &SubstitutionReport| r.points.iter().map(|p| p.verdict).collect::<Vec<_>>();
            assert_eq!(verdicts(rep), verdicts(&single), "{id}");
            assert!(rep.all_agree(), "{id}");
        }
    }

    #[test]
    fn unknown_and_parameter_free() {
        assert!(matches!(
            random_substitution_check(&fixtures::f1_minus2(), "nope", 3, 1),
            Err(OracleError::UnknownCheck(_))
        ));
        assert!(matches!(
            random_substitution_check(&fixtures::f2_star(), "eq6", 3, 1),
            Err(OracleError::NoParameters)
        ));
    }
}
