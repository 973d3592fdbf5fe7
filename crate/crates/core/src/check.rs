//! Verdicts and check results shared by validation and the identity suite.

use std::fmt;

use crate::model::{ConstraintSet, Tensor};
use crate::scalar::{Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Holds,
    Fails,
    Conditional,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Conditional => "conditional",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One nonzero residual component, labelled by what it measures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub component: String,
    pub value: Scalar,
}

impl Residual {
    pub fn new(component: impl Into<String>, value: Scalar) -> Self {
        Residual {
            component: component.into(),
            value,
        }
    }
}

/// Collects labelled residual components, dropping zeros.
#[derive(Clone, Debug, Default)]
pub struct Residuals(Vec<Residual>);

impl Residuals {
    pub fn new() -> Self {
        Residuals::default()
    }

    pub fn push(&mut self, component: impl Into<String>, value: Scalar) {
        if !value.is_zero() {
            self.0.push(Residual::new(component, value));
        }
    }

    /// Adds every nonzero entry of `m`, labelled `label[i,j]` (1-based).
    pub fn push_matrix(&mut self, label: &str, m: &Matrix) {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let v = &m[(i, j)];
                if !v.is_zero() {
                    self.0
                        .push(Residual::new(format!("{label}[{},{}]", i + 1, j + 1), v.clone()));
                }
            }
        }
    }

    pub fn push_vector(&mut self, label: &str, v: &[Scalar]) {
        for (i, s) in v.iter().enumerate() {
            if !s.is_zero() {
                self.0.push(Residual::new(format!("{label}[{}]", i + 1), s.clone()));
            }
        }
    }

    pub fn push_tensor(&mut self, label: &str, t: &Tensor) {
        for (idx, v) in t.nonzero() {
            let ix: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            self.0.push(Residual::new(format!("{label}[{}]", ix.join(",")), v));
        }
    }

    pub fn extend(&mut self, other: Residuals) {
        self.0.extend(other.0);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<Residual> {
        self.0
    }

    pub fn as_slice(&self) -> &[Residual] {
        &self.0
    }

    /// Truth value of "all residuals vanish".
    pub fn truth(&self, has_params: bool) -> Truth {
        Truth::from_residuals(&self.0, has_params)
    }
}

/// Three-valued truth of a condition on a possibly parameterized spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Truth {
    True,
    False,
    /// Holds exactly on the common zero set of the constraints.
    Conditional(ConstraintSet),
}

impl Truth {
    pub fn from_residuals(residuals: &[Residual], has_params: bool) -> Truth {
        if residuals.is_empty() {
            return Truth::True;
        }
        let set = ConstraintSet::from_residuals(residuals.iter().map(|r| &r.value));
        if set.is_inconsistent() || !has_params {
            Truth::False
        } else {
            Truth::Conditional(set)
        }
    }

    pub fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn is_true(&self) -> bool {
        matches!(self, Truth::True)
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Truth::False)
    }

    /// Conjunction; conditional parts combine their constraints.
    pub fn and(&self, other: &Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, t) | (t, Truth::True) => t.clone(),
            (Truth::Conditional(a), Truth::Conditional(b)) => {
                let u = a.union(b);
                if u.is_inconsistent() {
                    Truth::False
                } else {
                    Truth::Conditional(u)
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Truth::True => "true".into(),
            Truth::False => "false".into(),
            Truth::Conditional(c) => format!("conditional {c}"),
        }
    }
}

/// Result of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    /// The identity or condition being checked, written out.
    pub statement: String,
    pub verdict: Verdict,
    pub residual: Vec<Residual>,
    pub constraints: ConstraintSet,
    /// For an undecided implication: the premise generators. The check
    /// holds wherever they do not all vanish, and elsewhere iff the
    /// residual vanishes.
    pub premise: Option<ConstraintSet>,
    pub note: Option<String>,
}

impl CheckResult {
    /// Verdict from residual components: empty means holds, otherwise the
    /// numerators become constraints (conditional) unless they force failure.
    pub fn from_residuals(
        id: impl Into<String>,
        statement: impl Into<String>,
        residuals: Residuals,
        has_params: bool,
    ) -> Self {
        let truth = residuals.truth(has_params);
        let (verdict, constraints) = match truth {
            Truth::True => (Verdict::Holds, ConstraintSet::empty()),
            Truth::False => (
                Verdict::Fails,
                ConstraintSet::from_residuals(residuals.as_slice().iter().map(|r| &r.value)),
            ),
            Truth::Conditional(c) => (Verdict::Conditional, c),
        };
        CheckResult {
            id: id.into(),
            statement: statement.into(),
            verdict,
            residual: residuals.into_vec(),
            constraints,
            premise: None,
            note: None,
        }
    }

    pub fn holds(id: impl Into<String>, statement: impl Into<String>) -> Self {
        CheckResult::from_residuals(id, statement, Residuals::new(), false)
    }

    pub fn fails(id: impl Into<String>, statement: impl Into<String>, note: impl Into<String>) -> Self {
        CheckResult {
            id: id.into(),
            statement: statement.into(),
            verdict: Verdict::Fails,
            residual: Vec::new(),
            constraints: ConstraintSet::empty(),
            premise: None,
            note: Some(note.into()),
        }
    }

    pub fn not_applicable(id: impl Into<String>, statement: impl Into<String>, why: impl Into<String>) -> Self {
        CheckResult {
            id: id.into(),
            statement: statement.into(),
            verdict: Verdict::NotApplicable,
            residual: Vec::new(),
            constraints: ConstraintSet::empty(),
            premise: None,
            note: Some(why.into()),
        }
    }

    /// Verdict of `premise => conclusion`; a false premise makes it vacuous.
    pub fn implication(
        id: impl Into<String>,
        statement: impl Into<String>,
        premise: &Truth,
        conclusion: Residuals,
        has_params: bool,
    ) -> Self {
        let (id, statement) = (id.into(), statement.into());
        match premise {
            Truth::False => CheckResult::holds(id, statement).with_note("vacuous: premise does not hold"),
            Truth::True => CheckResult::from_residuals(id, statement, conclusion, has_params),
            Truth::Conditional(p) => {
                let concl = conclusion.truth(has_params);
                match concl {
                    Truth::True => CheckResult::from_residuals(id, statement, conclusion, has_params),
                    Truth::Conditional(ref c) if c == p => CheckResult {
                        premise: Some(p.clone()),
                        ..CheckResult::holds(id, statement)
                            .with_note(format!("premise and conclusion both hold exactly on {p}"))
                    },
                    Truth::Conditional(ref c) if p.implies(c) => CheckResult {
                        premise: Some(p.clone()),
                        ..CheckResult::holds(id, statement)
                            .with_note(format!("conclusion {c} vanishes wherever the premise {p} does"))
                    },
                    _ => CheckResult {
                        id,
                        statement,
                        verdict: Verdict::Conditional,
                        residual: conclusion.into_vec(),
                        constraints: p.clone(),
                        premise: Some(p.clone()),
                        note: Some(format!(
                            "premise holds on {p}, conclusion is {}; specialize parameters to decide",
                            concl.label()
                        )),
                    },
                }
            }
        }
    }

    /// All listed truths must agree.
    pub fn equivalence(id: impl Into<String>, statement: impl Into<String>, parts: &[(&str, Truth)]) -> Self {
        let (id, statement) = (id.into(), statement.into());
        let table = parts
            .iter()
            .map(|(name, t)| format!("{name}: {}", t.label()))
            .collect::<Vec<_>>()
            .join("; ");
        let all_true = parts.iter().all(|(_, t)| t.is_true());
        let all_false = parts.iter().all(|(_, t)| t.is_false());
        let first_cond = parts.first().and_then(|(_, t)| match t {
            Truth::Conditional(c) => Some(c.clone()),
            _ => None,
        });
        let all_same_cond = first_cond
            .as_ref()
            .is_some_and(|c| parts.iter().all(|(_, t)| matches!(t, Truth::Conditional(d) if d == c)));
        if all_true || all_false || all_same_cond {
            return CheckResult::holds(id, statement).with_note(table);
        }
        let any_cond = parts.iter().any(|(_, t)| matches!(t, Truth::Conditional(_)));
        if any_cond {
            let constraints = parts.iter().fold(ConstraintSet::empty(), |acc, (_, t)| match t {
                Truth::Conditional(c) => acc.union(c),
                _ => acc,
            });
            return CheckResult {
                id,
                statement,
                verdict: Verdict::Conditional,
                residual: Vec::new(),
                constraints,
                premise: None,
                note: Some(format!("{table}; specialize parameters to decide")),
            };
        }
        CheckResult::fails(id, statement, format!("verdicts disagree: {table}"))
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
        self
    }

    pub fn holds_exactly(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}
