//! Exact arithmetic: rationals, multivariate polynomials, rational functions
//! and small dense matrices over them.

mod matrix;
mod poly;
mod ratfunc;

pub use matrix::{LinearSolution, Matrix};
pub use poly::{Monomial, Params, Poly};
pub use ratfunc::Scalar;

use num_traits::{One, Signed};
use thiserror::Error;

/// Arbitrary-precision rational; always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("denominator vanishes at {point}")]
    VanishingDenominator { point: String },
    #[error("parameter `{0}` is not assigned")]
    UnassignedParameter(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("cannot decide signature symbolically: entry {row},{col} depends on parameters")]
    SymbolicSignature { row: usize, col: usize },
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

/// `p/q` for non-integers, `p` otherwise.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if d.is_positive() || d.is_negative() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Exact square root of a nonnegative rational, if it has one.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ab() -> Params {
        Params::new(["alpha", "beta"])
    }

    #[test]
    fn distributivity() {
        let p = ab();
        let alpha = Scalar::param(&p, 0);
        let beta = Scalar::param(&p, 1);
        let prod = (&alpha + &Scalar::from_int(2)) * &beta;
        assert_eq!(prod.to_string(), "alpha*beta + 2*beta");
    }

    #[test]
    fn cancellation_to_zero() {
        let beta = Scalar::param(&ab(), 1);
        let d = beta.pow(2) - beta.pow(2);
        assert!(d.is_zero());
        assert_eq!(d.to_string(), "0");
    }

    #[test]
    fn common_factor_cancels() {
        let p = ab();
        let alpha = Scalar::param(&p, 0);
        let beta = Scalar::param(&p, 1);
        let num = &alpha * &beta + Scalar::from_int(2) * &beta;
        let q = &num / &beta;
        assert!(q.is_polynomial());
        assert_eq!(q.to_string(), "alpha + 2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = Scalar::param(&ab(), 0);
        assert_eq!(a.checked_div(&Scalar::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn substitute_examples() {
        let p = ab();
        let alpha = Scalar::param(&p, 0);
        let beta = Scalar::param(&p, 1);
        let r = |n: i64| Rational::from_integer(n.into());
        assert_eq!(
            (&alpha + &Scalar::from_int(2)).substitute(&[("alpha", r(-2))]).unwrap(),
            r(0)
        );
        assert_eq!(beta.pow(2).substitute(&[("beta", r(3))]).unwrap(), r(9));

        let bc = Params::new(["b", "c"]);
        let half_diff = (Scalar::param(&bc, 0) - Scalar::param(&bc, 1)).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(
            half_diff.substitute(&[("b", r(1)), ("c", r(0))]).unwrap(),
            Rational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn substitute_reports_vanishing_denominator() {
        let p = ab();
        let s = Scalar::one() / (Scalar::param(&p, 0) + Scalar::from_int(2));
        let err = s
            .substitute(&[
                ("alpha", Rational::from_integer((-2).into())),
                ("beta", Rational::from_integer(0.into())),
            ])
            .unwrap_err();
        assert!(matches!(err, ScalarError::VanishingDenominator { ref point } if point.contains("alpha=-2")));
    }

    #[test]
    fn substitute_requires_every_occurring_parameter() {
        let s = Scalar::param(&ab(), 1);
        assert_eq!(
            s.substitute(&[("alpha", Rational::one())]),
            Err(ScalarError::UnassignedParameter("beta".into()))
        );
    }

    #[test]
    fn rational_parsing_and_roots() {
        assert_eq!(parse_rational("-3/6"), Some(Rational::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(
            rational_sqrt(&Rational::new(9.into(), 4.into())),
            Some(Rational::new(3.into(), 2.into()))
        );
        assert_eq!(rational_sqrt(&Rational::new(2.into(), 1.into())), None);
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        // small random polynomials in alpha, beta, optionally divided by
        // another small polynomial
        let term = (-4i64..=4, 1i64..=3, 0u32..=2, 0u32..=2);
        let poly = prop::collection::vec(term, 1..4).prop_map(|ts| {
            let p = ab();
            ts.into_iter()
                .map(|(n, d, ea, eb)| {
                    Scalar::from_ratio(n, d) * Scalar::param(&p, 0).pow(ea) * Scalar::param(&p, 1).pow(eb)
                })
                .sum::<Scalar>()
        });
        (poly.clone(), poly, any::<bool>()).prop_map(|(n, d, divide)| if divide && !d.is_zero() { n / d } else { n })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn normal_form_soundness(a in arb_scalar(), b in arb_scalar()) {
            prop_assert!((&a - &a).is_zero());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a.clone());
            }
            // normalizing an already-normal value changes nothing
            let again = Scalar::from_parts(a.numer().clone(), a.denom().clone()).unwrap();
            prop_assert_eq!(again.to_string(), a.to_string());
        }

        #[test]
        fn substitution_is_a_ring_homomorphism(
            a in arb_scalar(),
            b in arb_scalar(),
            x in -9i64..=9,
            y in 1i64..=9,
        ) {
            let point = [("alpha", Rational::from_integer(x.into())), ("beta", Rational::new(1.into(), y.into()))];
            if let (Ok(sa), Ok(sb)) = (a.substitute(&point), b.substitute(&point)) {
                prop_assert_eq!((&a * &b).substitute(&point).unwrap(), &sa * &sb);
                prop_assert_eq!((&a + &b).substitute(&point).unwrap(), sa + sb);
            }
        }
    }
}
