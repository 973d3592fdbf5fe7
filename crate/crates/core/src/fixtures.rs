//! Reference structures used throughout tests, benches and the CLI.
//!
//! * `F1(alpha, beta)`: brackets `[e1,e2] = alpha e3`, `[e1,e3] = beta e2`,
//!   `[e2,e3] = beta e1`, metric `diag(1,-1,1)`, `phi e1 = e2`, `phi e2 = e1`,
//!   `xi = e3`.
//! * `F2(b, c)`: as `F1` with `alpha = -2` but `[e1,e3] = b e2` and
//!   `[e2,e3] = c e1`. `F2* = F2(1, 0)` is paracontact with `h != 0`.
//! * the abelian algebra with the same metric and structure tensors (flat,
//!   almost paracontact but not paracontact).

use crate::model::{AlgebraSpec, SpecBuilder};
use crate::scalar::{Matrix, Params, Rational, Scalar};

/// DSL source of the reference example with free `alpha`, `beta`.
pub const F1_SOURCE: &str = r#"manifold "ss-example" {
  dim 3
  params [alpha, beta]
  metric diag(1, -1, 1)
  bracket [1,2] = alpha * e3
  bracket [1,3] = beta * e2
  bracket [2,3] = beta * e1
  phi e1 = e2
  phi e2 = e1
  phi e3 = 0
  xi = e3
  eta = dual(e3)
}
"#;

fn vec3(a: Scalar, b: Scalar, c: Scalar) -> Vec<Scalar> {
    vec![a, b, c]
}

fn e(k: usize) -> Vec<Scalar> {
    (0..3)
        .map(|i| if i == k { Scalar::one() } else { Scalar::zero() })
        .collect()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn metric(diag: &[i64]) -> Matrix {
    Matrix::diag(diag.iter().map(|&x| Scalar::from_int(x)).collect())
}

/// Everything of `F1` except `phi e3`, so tests can vary it.
fn f1_base(params: &Params, alpha: Scalar, beta: Scalar, g: &[i64]) -> SpecBuilder {
    AlgebraSpec::builder("ss-example", 3, params.clone())
        .bracket(0, 1, vec3(Scalar::zero(), Scalar::zero(), alpha))
        .bracket(0, 2, vec3(Scalar::zero(), beta.clone(), Scalar::zero()))
        .bracket(1, 2, vec3(beta, Scalar::zero(), Scalar::zero()))
        .metric(metric(g))
        .phi(0, e(1))
        .phi(1, e(0))
        .xi(vec![q(0), q(0), q(1)])
        .eta(vec![q(0), q(0), q(1)])
}

pub fn f1_builder(params: &Params, alpha: Scalar, beta: Scalar) -> SpecBuilder {
    f1_base(params, alpha, beta, &[1, -1, 1]).phi(2, vec![Scalar::zero(); 3])
}

/// `F1(alpha, beta)` with both parameters free.
pub fn f1_symbolic() -> AlgebraSpec {
    let p = Params::new(["alpha", "beta"]);
    f1_builder(&p, Scalar::param(&p, 0), Scalar::param(&p, 1))
        .build()
        .expect("F1 is well formed")
}

/// `F1(-2, beta)` with `beta` free.
pub fn f1_minus2() -> AlgebraSpec {
    let p = Params::new(["beta"]);
    f1_builder(&p, Scalar::from_int(-2), Scalar::param(&p, 0))
        .build()
        .expect("F1 is well formed")
}

/// `F1(alpha, beta)` at concrete values.
pub fn f1_at(alpha: Rational, beta: Rational) -> AlgebraSpec {
    f1_builder(&Params::empty(), alpha.into(), beta.into())
        .build()
        .expect("F1 is well formed")
}

pub fn f1_with_phi3(phi3: Vec<Scalar>) -> AlgebraSpec {
    f1_base(&Params::empty(), Scalar::from_int(-2), Scalar::zero(), &[1, -1, 1])
        .phi(2, phi3)
        .build()
        .expect("well formed")
}

pub fn f1_with_metric(g: &[i64]) -> AlgebraSpec {
    f1_base(&Params::empty(), Scalar::from_int(-2), Scalar::zero(), g)
        .build()
        .expect("well formed")
}

fn f2_builder(params: &Params, b: Scalar, c: Scalar) -> SpecBuilder {
    AlgebraSpec::builder("f2", 3, params.clone())
        .bracket(0, 1, vec3(Scalar::zero(), Scalar::zero(), Scalar::from_int(-2)))
        .bracket(0, 2, vec3(Scalar::zero(), b, Scalar::zero()))
        .bracket(1, 2, vec3(c, Scalar::zero(), Scalar::zero()))
        .metric(metric(&[1, -1, 1]))
        .phi(0, e(1))
        .phi(1, e(0))
        .xi(vec![q(0), q(0), q(1)])
        .eta(vec![q(0), q(0), q(1)])
}

/// `F2(b, c)` with both parameters free.
pub fn f2_symbolic() -> AlgebraSpec {
    let p = Params::new(["b", "c"]);
    f2_builder(&p, Scalar::param(&p, 0), Scalar::param(&p, 1))
        .build()
        .expect("F2 is well formed")
}

pub fn f2_at(b: Rational, c: Rational) -> AlgebraSpec {
    f2_builder(&Params::empty(), b.into(), c.into())
        .build()
        .expect("F2 is well formed")
}

/// `F2(1, 0)`.
pub fn f2_star() -> AlgebraSpec {
    f2_at(q(1), q(0))
}

/// All brackets zero; flat and almost paracontact.
pub fn abelian() -> AlgebraSpec {
    AlgebraSpec::builder("abelian", 3, Params::empty())
        .metric(metric(&[1, -1, 1]))
        .phi(0, e(1))
        .phi(1, e(0))
        .xi(vec![q(0), q(0), q(1)])
        .eta(vec![q(0), q(0), q(1)])
        .build()
        .expect("abelian spec is well formed")
}
