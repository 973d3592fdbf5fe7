//! Left-invariant structure data on a Lie algebra, in a fixed frame.

use std::fmt;

use thiserror::Error;

use crate::scalar::{Matrix, Params, Rational, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("dimension must be odd and at least 3, got {0}")]
    BadDimension(usize),
    #[error("frame index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket indices must differ")]
    DiagonalBracket,
    #[error("bracket [e{0},e{1}] defined twice")]
    DuplicateBracket(usize, usize),
    #[error("phi e{0} defined twice")]
    DuplicatePhi(usize),
    #[error("metric must be a symmetric matrix")]
    MetricNotSymmetric,
    #[error("metric entries must be parameter-free rationals")]
    MetricNotConstant,
    #[error("metric is singular")]
    MetricSingular,
    #[error("{0} must have parameter-free components")]
    NotConstant(&'static str),
    #[error("missing required item: {0}")]
    Missing(&'static str),
    #[error("{what} has length {got}, expected {expected}")]
    Length {
        what: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// An almost paracontact metric candidate on a Lie algebra.
///
/// Frame indices are 0-based here; the DSL is 1-based. Structure constants
/// are stored as `c[k][i][j]` with `[E_i, E_j] = c^k_{ij} E_k`, and the
/// endomorphism `phi` is stored column-wise: `phi E_j = phi[(k, j)] E_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    name: String,
    dim: usize,
    params: Params,
    structure: Vec<Scalar>,
    metric: Matrix,
    metric_inv: Matrix,
    phi: Matrix,
    xi: Vec<Rational>,
    eta: Vec<Rational>,
}

impl AlgebraSpec {
    pub fn builder(name: impl Into<String>, dim: usize, params: Params) -> SpecBuilder {
        SpecBuilder {
            name: name.into(),
            dim,
            params,
            brackets: Vec::new(),
            metric: None,
            phi: Vec::new(),
            xi: None,
            eta: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `dim = 2n + 1`.
    pub fn n(&self) -> usize {
        (self.dim - 1) / 2
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn has_params(&self) -> bool {
        !self.params.is_empty()
    }

    /// `c^k_{ij}`.
    pub fn c(&self, k: usize, i: usize, j: usize) -> &Scalar {
        let d = self.dim;
        &self.structure[k * d * d + i * d + j]
    }

    /// Components of `[E_i, E_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.c(k, i, j).clone()).collect()
    }

    /// `[u, v]` for vectors given by frame components.
    pub fn bracket_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = vec![Scalar::zero(); d];
        for i in 0..d {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v[j].is_zero() || i == j {
                    continue;
                }
                let f = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(k, i, j);
                    if !c.is_zero() {
                        *o = &*o + &(&f * c);
                    }
                }
            }
        }
        out
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn metric_inverse(&self) -> &Matrix {
        &self.metric_inv
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn xi_rational(&self) -> &[Rational] {
        &self.xi
    }

    pub fn eta_rational(&self) -> &[Rational] {
        &self.eta
    }

    pub fn xi(&self) -> Vec<Scalar> {
        self.xi.iter().cloned().map(Scalar::from).collect()
    }

    pub fn eta(&self) -> Vec<Scalar> {
        self.eta.iter().cloned().map(Scalar::from).collect()
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        (0..self.dim)
            .map(|k| if k == i { Scalar::one() } else { Scalar::zero() })
            .collect()
    }

    /// `g(u, v)`.
    pub fn inner(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let gv = self.metric.mul_vec(v);
        u.iter().zip(&gv).map(|(a, b)| a * b).sum()
    }

    pub fn eta_of(&self, v: &[Scalar]) -> Scalar {
        self.eta
            .iter()
            .zip(v)
            .filter(|(e, _)| !num_traits::Zero::is_zero(*e))
            .map(|(e, x)| x.scale(e))
            .sum()
    }

    /// Substitutes rationals for the named parameters; the remaining
    /// parameters keep their declared order.
    pub fn specialize(&self, assignment: &[(String, Rational)]) -> Result<AlgebraSpec, SpecError> {
        let mut values: Vec<Option<Rational>> = vec![None; self.params.len()];
        for (name, v) in assignment {
            let i = self
                .params
                .index_of(name)
                .ok_or_else(|| SpecError::UnknownParameter(name.clone()))?;
            values[i] = Some(v.clone());
        }
        let remaining = Params::new(
            self.params
                .names()
                .iter()
                .zip(&values)
                .filter(|(_, v)| v.is_none())
                .map(|(n, _)| n.clone()),
        );
        let sp = |s: &Scalar| -> Result<Scalar, SpecError> {
            if s.params().is_empty() {
                Ok(s.clone())
            } else {
                Ok(s.specialize(&values, &remaining)?)
            }
        };
        let structure = self.structure.iter().map(sp).collect::<Result<Vec<_>, _>>()?;
        let phi_entries = self.phi.entries().iter().map(sp).collect::<Result<Vec<_>, _>>()?;
        let d = self.dim;
        Ok(AlgebraSpec {
            name: self.name.clone(),
            dim: d,
            params: remaining,
            structure,
            metric: self.metric.clone(),
            metric_inv: self.metric_inv.clone(),
            phi: Matrix::from_fn(d, d, |i, j| phi_entries[i * d + j].clone()),
            xi: self.xi.clone(),
            eta: self.eta.clone(),
        })
    }

    /// Same brackets and phi with a new metric, Reeb vector and contact form.
    pub fn with_structure(
        &self,
        name: impl Into<String>,
        metric: Matrix,
        xi: Vec<Rational>,
        eta: Vec<Rational>,
    ) -> Result<AlgebraSpec, SpecError> {
        let mut b = AlgebraSpec::builder(name, self.dim, self.params.clone());
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.bracket(i, j);
                if v.iter().any(|s| !s.is_zero()) {
                    b = b.bracket(i, j, v);
                }
            }
            b = b.phi(i, (0..self.dim).map(|k| self.phi[(k, i)].clone()).collect());
        }
        b.metric(metric).xi(xi).eta(eta).build()
    }
}

impl fmt::Display for AlgebraSpec {
    /// Writes the spec back out in the input DSL.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::frontend::print_spec(self))
    }
}

/// Incremental construction of an [`AlgebraSpec`]; every item is optional
/// except the metric and the Reeb vector.
#[derive(Clone, Debug)]
pub struct SpecBuilder {
    name: String,
    dim: usize,
    params: Params,
    brackets: Vec<(usize, usize, Vec<Scalar>)>,
    metric: Option<Matrix>,
    phi: Vec<(usize, Vec<Scalar>)>,
    xi: Option<Vec<Rational>>,
    eta: Option<Vec<Rational>>,
}

impl SpecBuilder {
    /// `[E_i, E_j] = value` (0-based).
    pub fn bracket(mut self, i: usize, j: usize, value: Vec<Scalar>) -> Self {
        self.brackets.push((i, j, value));
        self
    }

    pub fn metric(mut self, g: Matrix) -> Self {
        self.metric = Some(g);
        self
    }

    /// `phi E_j = value` (0-based).
    pub fn phi(mut self, j: usize, value: Vec<Scalar>) -> Self {
        self.phi.push((j, value));
        self
    }

    pub fn xi(mut self, xi: Vec<Rational>) -> Self {
        self.xi = Some(xi);
        self
    }

    pub fn eta(mut self, eta: Vec<Rational>) -> Self {
        self.eta = Some(eta);
        self
    }

    pub fn build(self) -> Result<AlgebraSpec, SpecError> {
        let d = self.dim;
        if d < 3 || d.is_multiple_of(2) {
            return Err(SpecError::BadDimension(d));
        }
        let check_index = |index: usize| {
            if index < d {
                Ok(())
            } else {
                Err(SpecError::IndexOutOfRange { index, dim: d })
            }
        };
        let check_len = |what: &'static str, got: usize| {
            if got == d {
                Ok(())
            } else {
                Err(SpecError::Length { what, got, expected: d })
            }
        };

        let mut structure = vec![Scalar::zero(); d * d * d];
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, v) in &self.brackets {
            check_index(*i)?;
            check_index(*j)?;
            if i == j {
                return Err(SpecError::DiagonalBracket);
            }
            let key = (*i.min(j), *i.max(j));
            if !seen.insert(key) {
                return Err(SpecError::DuplicateBracket(key.0 + 1, key.1 + 1));
            }
            check_len("bracket value", v.len())?;
            for (k, s) in v.iter().enumerate() {
                structure[k * d * d + i * d + j] = s.clone();
                structure[k * d * d + j * d + i] = -s;
            }
        }

        let metric = self.metric.ok_or(SpecError::Missing("metric"))?;
        if metric.rows() != d || metric.cols() != d {
            return Err(SpecError::Length {
                what: "metric",
                got: metric.rows(),
                expected: d,
            });
        }
        if !metric.is_constant() {
            return Err(SpecError::MetricNotConstant);
        }
        if !metric.is_symmetric() {
            return Err(SpecError::MetricNotSymmetric);
        }
        let metric_inv = metric.invert_symmetric().map_err(|e| match e {
            ScalarError::Singular => SpecError::MetricSingular,
            other => other.into(),
        })?;

        let mut phi = Matrix::zeros(d, d);
        let mut seen_phi = std::collections::BTreeSet::new();
        for (j, v) in &self.phi {
            check_index(*j)?;
            if !seen_phi.insert(*j) {
                return Err(SpecError::DuplicatePhi(j + 1));
            }
            check_len("phi column", v.len())?;
            for (k, s) in v.iter().enumerate() {
                phi[(k, *j)] = s.clone();
            }
        }

        let xi = self.xi.ok_or(SpecError::Missing("xi"))?;
        check_len("xi", xi.len())?;
        let eta = match self.eta {
            Some(eta) => eta,
            // eta defaults to g(., xi)
            None => {
                let xs: Vec<Scalar> = xi.iter().cloned().map(Scalar::from).collect();
                metric
                    .mul_vec(&xs)
                    .into_iter()
                    .map(|s| s.as_rational().expect("constant metric"))
                    .collect()
            }
        };
        check_len("eta", eta.len())?;

        Ok(AlgebraSpec {
            name: self.name,
            dim: d,
            params: self.params,
            structure,
            metric,
            metric_inv,
            phi,
            xi,
            eta,
        })
    }
}
