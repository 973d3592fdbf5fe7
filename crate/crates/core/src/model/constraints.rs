//! Polynomial constraint systems extracted from residual tensors.

use std::fmt;

use num_traits::Zero;

use crate::scalar::{Poly, Rational, Scalar};

/// Normalized polynomial generators: content-free, leading coefficient
/// positive, deduplicated and sorted by graded-lex leading terms.
///
/// Generators are numerators of residual components; denominators that
/// depend on parameters are kept as side conditions (assumed nonvanishing).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    generators: Vec<Poly>,
    side_conditions: Vec<Poly>,
}

impl ConstraintSet {
    pub fn empty() -> Self {
        ConstraintSet::default()
    }

    pub fn from_residuals<'a, I>(residuals: I) -> Self
    where
        I: IntoIterator<Item = &'a Scalar>,
    {
        let mut set = ConstraintSet::default();
        for s in residuals {
            set.push_scalar(s);
        }
        set.normalize();
        set
    }

    fn push_scalar(&mut self, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        self.generators.push(s.numer().primitive());
        if !s.denom().is_constant() {
            self.side_conditions.push(s.denom().primitive());
        }
    }

    fn normalize(&mut self) {
        for list in [&mut self.generators, &mut self.side_conditions] {
            list.sort();
            list.dedup_by(|a, b| a.to_string() == b.to_string());
        }
    }

    pub fn union(&self, other: &ConstraintSet) -> ConstraintSet {
        let mut out = self.clone();
        out.generators.extend(other.generators.iter().cloned());
        out.side_conditions.extend(other.side_conditions.iter().cloned());
        out.normalize();
        out
    }

    /// Sufficient test that every common zero of `self` is a zero of
    /// `other`: each generator of `other` has a power, up to the cube,
    /// divisible by a single generator of `self`.
    pub fn implies(&self, other: &ConstraintSet) -> bool {
        !self.generators.is_empty()
            && other.generators.iter().all(|c| {
                (1..=3).any(|k| {
                    let ck = c.pow(k);
                    self.generators.iter().any(|p| ck.div_exact(p).is_some())
                })
            })
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn side_conditions(&self) -> &[Poly] {
        &self.side_conditions
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    /// A nonzero constant generator means the condition can never hold.
    pub fn is_inconsistent(&self) -> bool {
        self.generators.iter().any(Poly::is_constant)
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(ToString::to_string).collect()
    }

    /// Solves what can be solved without a Groebner engine: generators that
    /// are univariate, via their rational roots.
    pub fn solve_univariate(&self) -> Vec<UnivariateSolution> {
        let mut out = Vec::new();
        for g in &self.generators {
            let occ = g.occurring_params();
            if occ.len() != 1 {
                continue;
            }
            let var = occ[0];
            let coeffs = g.univariate_coeffs(var).expect("univariate");
            out.push(UnivariateSolution {
                parameter: g.params().names()[var].clone(),
                generator: g.to_string(),
                roots: rational_roots(&coeffs),
            });
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateSolution {
    pub parameter: String,
    pub generator: String,
    pub roots: Vec<Rational>,
}

/// Rational roots of `sum coeffs[i] x^i` by the rational root test.
pub fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed};

    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    // strip x factors: zero is a root
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Rational::zero());
        ints.drain(..shift);
    }
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    if ints.len() < 2 {
        return roots;
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut ds = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                ds.push(d.clone());
                ds.push(&n / &d);
            }
            d += 1;
        }
        ds
    };
    let eval = |x: &Rational| {
        ints.iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    };
    let lead = ints.last().unwrap().clone();
    for p in divisors(&ints[0]) {
        for q in divisors(&lead) {
            for cand in [
                Rational::new(p.clone(), q.clone()),
                -Rational::new(p.clone(), q.clone()),
            ] {
                if !roots.contains(&cand) && eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.generator_strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Params;

    #[test]
    fn normalization_and_dedup() {
        let p = Params::new(["alpha", "beta"]);
        let alpha = Scalar::param(&p, 0);
        let beta = Scalar::param(&p, 1);
        let r1 = (&alpha + &Scalar::from_int(2)).scale(&Rational::new(1.into(), 2.into()));
        let r2 = -(&alpha + &Scalar::from_int(2));
        let r3 = beta.scale(&Rational::from_integer((-3).into()));
        let set = ConstraintSet::from_residuals([&r1, &r2, &r3, &Scalar::zero()]);
        assert_eq!(set.generator_strings(), vec!["beta", "alpha + 2"]);
        assert!(!set.is_inconsistent());
        let roots = set.solve_univariate();
        assert_eq!(roots[1].roots, vec![Rational::from_integer((-2).into())]);
    }

    #[test]
    fn constants_are_inconsistent() {
        let set = ConstraintSet::from_residuals([&Scalar::from_ratio(-3, 4)]);
        assert_eq!(set.generator_strings(), vec!["1"]);
        assert!(set.is_inconsistent());
    }

    #[test]
    fn rational_root_search() {
        let q = |n: i64| Rational::from_integer(n.into());
        // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
        assert_eq!(
            rational_roots(&[q(1), q(-3), q(2)]),
            vec![Rational::new(1.into(), 2.into()), q(1)]
        );
        assert!(rational_roots(&[q(1), q(0), q(1)]).is_empty());
        assert_eq!(rational_roots(&[q(0), q(0), q(5)]), vec![q(0)]);
    }
}
