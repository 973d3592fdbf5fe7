//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic over the declared parameter order, so the last entry
//! of the map is always the leading term.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Rational};

/// Ordered list of parameter names a polynomial is written in.
///
/// Cloning is cheap; equality compares names, not pointers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Params(Arc<[String]>);

impl Params {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Params(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    pub fn empty() -> Self {
        Params::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

/// Exponent vector, one entry per parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    /// Componentwise minimum of the exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the first parameter
    /// with a differing exponent decides.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial over the rationals.
#[derive(Clone, Debug)]
pub struct Poly {
    params: Params,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(params: &Params) -> Self {
        Poly {
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(params: &Params, c: Rational) -> Self {
        let mut p = Poly::zero(params);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(params.len()), c);
        }
        p
    }

    pub fn one(params: &Params) -> Self {
        Poly::constant(params, Rational::one())
    }

    /// The polynomial consisting of the single parameter at `index`.
    pub fn var(params: &Params, index: usize) -> Self {
        assert!(index < params.len(), "parameter index out of range");
        let mut p = Poly::zero(params);
        p.terms.insert(Monomial::var(params.len(), index), Rational::one());
        p
    }

    pub fn from_terms<I>(params: &Params, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Poly::zero(params);
        for (m, c) in terms {
            assert_eq!(m.0.len(), params.len(), "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no term carries a parameter.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Indices of the parameters that actually occur.
    pub fn occurring_params(&self) -> Vec<usize> {
        (0..self.params.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Re-expresses `self` in `params`. Only constants may change rings.
    fn in_ring(&self, params: &Params) -> Poly {
        if &self.params == params {
            return self.clone();
        }
        assert!(
            self.is_constant(),
            "mixing polynomials over different parameter lists: {:?} vs {:?}",
            self.params.names(),
            params.names()
        );
        Poly::constant(params, self.constant_value().unwrap_or_else(Rational::zero))
    }

    /// Picks the common ring of two operands, preferring the non-empty one.
    fn unify(a: &Poly, b: &Poly) -> (Poly, Poly) {
        if a.params == b.params {
            (a.clone(), b.clone())
        } else if a.is_constant() && !b.params.is_empty() {
            (a.in_ring(&b.params), b.clone())
        } else {
            (a.clone(), b.in_ring(&a.params))
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.params);
        }
        Poly {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one(&self.params);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Rational content with the sign of the leading coefficient: dividing by
    /// it yields an integer polynomial with coprime coefficients and positive
    /// leading coefficient. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        let Some((_, lc)) = self.leading_term() else {
            return Rational::zero();
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let content = Rational::new(num_gcd, den_lcm);
        if lc.is_negative() {
            -content
        } else {
            content
        }
    }

    /// `self / content()`; zero stays zero.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Largest monomial dividing every term (the all-zero exponent for zero).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.params.len()),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            params: self.params.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    debug_assert!(m.divides(t));
                    (t.div(m), c.clone())
                })
                .collect(),
        }
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, `None` if the
    /// division leaves a remainder. Panics on a zero divisor.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let (mut rem, divisor) = Poly::unify(self, divisor);
        let (lm, lc) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero divisor");
        let mut quot = Poly::zero(&rem.params);
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Evaluates the parameters listed in `assignment` (by index) and returns
    /// a polynomial over `target`, which must list the remaining parameters
    /// that occur, in any order.
    pub fn specialize(&self, assignment: &[Option<Rational>], target: &Params) -> Poly {
        assert_eq!(assignment.len(), self.params.len());
        let remap: Vec<Option<usize>> = self
            .params
            .names()
            .iter()
            .zip(assignment)
            .map(|(name, a)| match a {
                Some(_) => None,
                None => target.index_of(name),
            })
            .collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match (&assignment[i], remap[i]) {
                    (Some(v), _) => coeff *= pow_rational(v, e),
                    (None, Some(j)) => exps[j] = e,
                    (None, None) => panic!("parameter {} missing from target ring", self.params.names()[i]),
                }
            }
            out.add_term(Monomial(exps), coeff);
        }
        out
    }

    /// Full evaluation. Parameters absent from `values` must not occur.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.params.len());
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(values)
                    .fold(c.clone(), |acc, (&e, v)| acc * pow_rational(v, e))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Floating-point evaluation, for the numeric cross-checks.
    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.to_f64().unwrap_or(f64::NAN);
                for (&e, v) in m.0.iter().zip(values) {
                    t *= v.powi(e as i32);
                }
                t
            })
            .sum()
    }

    /// Univariate view when only the parameter at `index` occurs: coefficients
    /// in ascending degree.
    pub fn univariate_coeffs(&self, index: usize) -> Option<Vec<Rational>> {
        if self.occurring_params().iter().any(|&i| i != index) {
            return None;
        }
        let deg = self.terms.keys().map(|m| m.0[index]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[index] as usize] = c.clone();
        }
        Some(coeffs)
    }
}

pub(crate) fn pow_rational(v: &Rational, e: u32) -> Rational {
    num_traits::pow(v.clone(), e as usize)
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for Poly {}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    /// Compares term lists from the leading term down; used to sort
    /// constraint generators deterministically.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let (mut a, b) = Poly::unify(self, rhs);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let (mut a, b) = Poly::unify(self, rhs);
        for (m, c) in b.terms {
            a.add_term(m, -c);
        }
        a
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let (a, b) = Poly::unify(self, rhs);
        let mut out = Poly::zero(&a.params);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

fn fmt_monomial(m: &Monomial, params: &Params) -> String {
    m.0.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let name = &params.names()[i];
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Poly {
    /// Terms in descending graded-lex order, e.g. `alpha^2*beta - 2*alpha + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&fmt_monomial(m, &self.params))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), fmt_monomial(m, &self.params))?;
            }
        }
        Ok(())
    }
}
