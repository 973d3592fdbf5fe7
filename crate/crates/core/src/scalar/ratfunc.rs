//! Rational functions in the declared parameters: the scalar type every
//! tensor component is built from.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Params, Poly};
use super::{Rational, ScalarError};

/// Quotient of two polynomials, kept in a normal form:
///
/// * the denominator is a primitive integer polynomial with positive leading
///   coefficient (constant denominators are exactly `1`);
/// * common monomial factors are cancelled;
/// * if one side divides the other exactly, the division is carried out.
///
/// This is not a full gcd reduction, so two equal scalars can have different
/// representations. Equality is therefore decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_rational(Rational::new(n.into(), d.into()))
    }

    pub fn from_rational(r: Rational) -> Self {
        let params = Params::empty();
        Scalar {
            num: Poly::constant(&params, r),
            den: Poly::one(&params),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.params());
        Scalar { num: p, den }
    }

    pub fn param(params: &Params, index: usize) -> Self {
        Scalar::from_poly(Poly::var(params, index))
    }

    /// Builds `num / den` in normal form.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        let params = if num.params().is_empty() {
            den.params().clone()
        } else {
            num.params().clone()
        };
        if num.is_zero() {
            return Scalar {
                num: Poly::zero(&params),
                den: Poly::one(&params),
            };
        }
        let (mut num, mut den) = (num, den);
        if !den.is_constant() {
            let common = num.monomial_content().gcd(&den.monomial_content());
            if !common.is_one() {
                num = num.div_monomial(&common);
                den = den.div_monomial(&common);
            }
            if let Some(q) = num.div_exact(&den) {
                num = q;
                den = Poly::one(&params);
            } else if !num.is_constant() {
                if let Some(q) = den.div_exact(&num) {
                    den = q;
                    num = Poly::one(&params);
                }
            }
        }
        let c = den.content();
        let inv = c.recip();
        Scalar {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// True when no parameter occurs.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            let n = self.num.constant_value()?;
            let d = self.den.constant_value()?;
            Some(n / d)
        } else {
            None
        }
    }

    pub fn params(&self) -> &Params {
        if self.num.params().is_empty() {
            self.den.params()
        } else {
            self.num.params()
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn recip(&self) -> Result<Scalar, ScalarError> {
        Scalar::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        Scalar::normalize(self.num.pow(e), self.den.pow(e))
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        Scalar::normalize(self.num.scale(r), self.den.clone())
    }

    /// Substitutes rationals for the parameters given by name. Parameters
    /// not mentioned remain symbolic; the result lives over `target`.
    pub fn specialize(&self, assignment: &[Option<Rational>], target: &Params) -> Result<Scalar, ScalarError> {
        let src = self.params();
        let expand = |p: &Poly| {
            if p.params().is_empty() {
                Poly::constant(target, p.constant_value().unwrap_or_else(Rational::zero))
            } else {
                assert_eq!(p.params(), src);
                p.specialize(assignment, target)
            }
        };
        let den = expand(&self.den);
        if den.is_zero() {
            let point = src
                .names()
                .iter()
                .zip(assignment)
                .filter_map(|(n, v)| v.as_ref().map(|v| format!("{n}={}", super::fmt_rational(v))))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(ScalarError::VanishingDenominator { point });
        }
        Ok(Scalar::normalize(expand(&self.num), den))
    }

    /// Full substitution by name; every occurring parameter must be assigned.
    pub fn substitute(&self, assignment: &[(&str, Rational)]) -> Result<Rational, ScalarError> {
        let src = self.params().clone();
        let mut values: Vec<Option<Rational>> = vec![None; src.len()];
        for (name, v) in assignment {
            if let Some(i) = src.index_of(name) {
                values[i] = Some(v.clone());
            }
        }
        for i in self
            .num
            .occurring_params()
            .into_iter()
            .chain(self.den.occurring_params())
        {
            if values[i].is_none() {
                return Err(ScalarError::UnassignedParameter(src.names()[i].clone()));
            }
        }
        let filled: Vec<Option<Rational>> = values
            .into_iter()
            .map(|v| Some(v.unwrap_or_else(Rational::zero)))
            .collect();
        let s = self.specialize(&filled, &Params::empty())?;
        Ok(s.as_rational().expect("fully specialized scalar is constant"))
    }

    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        let n = if self.num.params().is_empty() {
            self.num.eval_f64(&[])
        } else {
            self.num.eval_f64(values)
        };
        let d = if self.den.params().is_empty() {
            self.den.eval_f64(&[])
        } else {
            self.den.eval_f64(values)
        };
        n / d
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        if self.den == rhs.den {
            return Scalar::normalize(&self.num + &rhs.num, self.den.clone());
        }
        Scalar::normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        if self.den == rhs.den {
            return Scalar::normalize(&self.num - &rhs.num, self.den.clone());
        }
        Scalar::normalize(&(&self.num * &rhs.den) - &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        Scalar::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] when the
    /// divisor is not known to be nonzero.
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar { (&self).$method(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
