use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::OracleError;
use crate::check::Verdict;
use crate::geometry::GeometryPack;
use crate::model::{check_paracontact, jacobi_residuals, validate_almost_paracontact, AlgebraSpec};
use crate::scalar::{fmt_rational, Matrix, Params, Rational, Scalar};

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub budget: usize,
    pub seed: u64,
    /// Candidate values for `b`.
    pub pool: Vec<Rational>,
    /// Candidate values for `c`; defaults to `pool`.
    pub pool_c: Option<Vec<Rational>>,
    /// Draw a single value and use it for both `b` and `c`.
    pub tie_bc: bool,
}

impl SearchConfig {
    pub fn new(budget: usize, seed: u64) -> Self {
        SearchConfig {
            budget,
            seed,
            pool: default_pool(),
            pool_c: None,
            tie_bc: false,
        }
    }
}

/// `{0, ±1, ±2, ±1/2}`.
pub fn default_pool() -> Vec<Rational> {
    [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)]
        .iter()
        .map(|&(n, d)| Rational::new(n.into(), d.into()))
        .collect()
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub spec: AlgebraSpec,
    pub b: Rational,
    pub c: Rational,
    pub h_zero: bool,
}

fn candidate(b: &Rational, c: &Rational) -> Option<AlgebraSpec> {
    let z = Scalar::zero;
    let e = |k: usize| {
        (0..3)
            .map(|i| if i == k { Scalar::one() } else { Scalar::zero() })
            .collect::<Vec<_>>()
    };
    let q = |n: i64| Rational::from_integer(n.into());
    let name = format!("search-b{}-c{}", fmt_rational(b), fmt_rational(c)).replace('/', "_");
    AlgebraSpec::builder(name, 3, Params::empty())
        .bracket(0, 1, vec![z(), z(), Scalar::from_int(-2)])
        .bracket(0, 2, vec![z(), b.clone().into(), z()])
        .bracket(1, 2, vec![c.clone().into(), z(), z()])
        .metric(Matrix::diag(vec![
            Scalar::from_int(1),
            Scalar::from_int(-1),
            Scalar::from_int(1),
        ]))
        .phi(0, e(1))
        .phi(1, e(0))
        .xi(vec![q(0), q(0), q(1)])
        .eta(vec![q(0), q(0), q(1)])
        .build()
        .ok()
}

/// Draws `(b, c)` for brackets `[E1,E2] = -2E3`, `[E1,E3] = bE2`,
/// `[E2,E3] = cE1` and keeps the distinct candidates that pass Jacobi,
/// almost-paracontact validation and the paracontact condition.
pub fn random_search(cfg: &SearchConfig) -> Result<Vec<SearchHit>, OracleError> {
    if cfg.budget == 0 {
        return Err(OracleError::EmptyBudget);
    }
    let pool_c = cfg.pool_c.as_ref().unwrap_or(&cfg.pool);
    if cfg.pool.is_empty() || pool_c.is_empty() {
        return Err(OracleError::EmptyPool);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut hits: Vec<SearchHit> = Vec::new();
    for _ in 0..cfg.budget {
        let b = cfg.pool.choose(&mut rng).unwrap().clone();
        let c = if cfg.tie_bc {
            b.clone()
        } else {
            pool_c.choose(&mut rng).unwrap().clone()
        };
        if hits.iter().any(|h| h.b == b && h.c == c) {
            continue;
        }
        let Some(spec) = candidate(&b, &c) else { continue };
        let valid = jacobi_residuals(&spec).is_empty()
            && validate_almost_paracontact(&spec, Default::default()).is_ok_and(|r| r.verdict == Verdict::Holds)
            && check_paracontact(&spec).verdict == Verdict::Holds;
        if !valid {
            continue;
        }
        let h_zero = GeometryPack::compute(&spec).h.entries().iter().all(Scalar::is_zero);
        hits.push(SearchHit { spec, b, c, h_zero });
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_under_seed() {
        let a = random_search(&SearchConfig::new(30, 42)).unwrap();
        let b = random_search(&SearchConfig::new(30, 42)).unwrap();
        let key = |v: &[SearchHit]| v.iter().map(|h| (h.b.clone(), h.c.clone())).collect::<Vec<_>>();
        assert_eq!(key(&a), key(&b));
        assert!(a.iter().any(|h| !h.h_zero));
    }

    #[test]
    fn tied_pool_gives_para_sasakian_only() {
        let mut cfg = SearchConfig::new(50, 5);
        cfg.tie_bc = true;
        let hits = random_search(&cfg).unwrap();
        assert!(!hits.is_empty());
        assert!(hits.iter().all(|h| h.h_zero));
    }

    #[test]
    fn budget_one() {
        let hits = random_search(&SearchConfig::new(1, 9)).unwrap();
        assert_eq!(hits.len(), 1);
        assert!(matches!(
            random_search(&SearchConfig::new(0, 9)),
            Err(OracleError::EmptyBudget)
        ));
    }
}
