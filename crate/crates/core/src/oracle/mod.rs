//! Independent cross-checks of the exact engine: curvature symmetries and
//! the Bianchi identities, a floating-point recomputation, randomized
//! parameter substitution and a random search for valid specs.

mod bianchi;
mod float;
mod search;
mod substitution;

pub use bianchi::{bianchi_oracle, curvature_symmetry_checks, engine_checks, mutation_sensitivity, MutationReport};
pub use float::{float_crosscheck, FloatReport};
pub use search::{random_search, SearchConfig, SearchHit};
pub use substitution::{
    random_substitution_check, random_substitution_checks, run_check, run_checks, PointOutcome, SubstitutionReport,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("spec has free parameters: {0}")]
    Parameterized(String),
    #[error("spec has no parameters to substitute")]
    NoParameters,
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("degenerate sampling: all {0} points were rejected")]
    DegenerateSampling(usize),
    #[error("search budget must be at least 1")]
    EmptyBudget,
    #[error("coefficient pool is empty")]
    EmptyPool,
}
