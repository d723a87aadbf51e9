//! Randomized identity testing.
//!
//! Two interchangeable testers live behind [`IdentityTester`] and are looked
//! up by name in a [`TesterRegistry`]:
//!
//! * `nfa`: substitutes the encoded automaton matrices of dimension `K + 1`
//!   for every `K <= K_max`, where `K_max` bounds log2 of the sparsity.
//! * `al`: the classical baseline, random `d x d` matrices with `d` linear
//!   in the degree.
//!
//! Both are one-sided: a `Zero` verdict may be wrong with probability at most
//! the reported bound, a `Nonzero` verdict never is.

mod al;
mod nfa;
mod params;
mod registry;
mod seeds;
mod symbolic;
mod verdict;

use num_bigint::BigUint;
use thiserror::Error;

use crate::circuit::BoxError;
use crate::ncpoly::NcPolyError;

pub use al::{al_dimension, al_identity_test, AlParams, DEFAULT_DIM_CAP};
pub use nfa::{nfa_identity_test, single_trial, TrialOutcome};
pub use params::{
    auto_modulus, plan_for_circuit, required_trials, PlanOptions, TestParams, TestPlan, DEFAULT_TARGET_ERROR,
    MAX_DERIVED_LOG2_SPARSITY,
};
pub use registry::{AlTester, IdentityTester, NfaTester, RunRequest, TesterRegistry};
pub use seeds::{splitmix64, trial_seed};
pub use symbolic::{block_index_monomial, symbolic_theorem_check, SymbolicReport};
pub use verdict::{Outcome, TrialRecord, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PitError {
    #[error("field of size {modulus} is too small: need more than {required}")]
    FieldTooSmall { modulus: BigUint, required: BigUint },
    #[error("black box refused dimension {dim}: {source}")]
    BoxDimRefused { dim: usize, source: BoxError },
    #[error("black box failure: {0}")]
    Box(BoxError),
    #[error("baseline needs {required} x {required} matrices, above the cap of {cap}")]
    DimTooLarge { required: String, cap: usize },
    #[error("per-trial error bound {eps_single} is not below 1")]
    DegenerateBound { eps_single: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("the circuit's degree bound saturates; supply a degree bound explicitly")]
    MissingDegreeBound,
    #[error("no usable sparsity bound can be derived ({0}); supply log2 of the sparsity explicitly")]
    MissingSparsityBound(String),
    #[error("unknown method `{0}`")]
    UnknownMethod(String),
    #[error(transparent)]
    NcPoly(#[from] NcPolyError),
    #[error("isolation failed: {0}")]
    Isolate(#[from] crate::isolate::IsolateError),
}

impl PitError {
    fn from_box(dim: usize, e: BoxError) -> PitError {
        match e {
            BoxError::DimRefused { .. } => PitError::BoxDimRefused { dim, source: e },
            other => PitError::Box(other),
        }
    }
}
