use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::algebra::PrimeField;
use crate::circuit::{BlackBox, Bound};

use super::al::{al_dimension, al_identity_test, AlParams};
use super::nfa::nfa_identity_test;
use super::params::{required_trials_log2, TestParams};
use super::verdict::Verdict;
use super::PitError;

fn modulus_string<S: Serializer>(f: &PrimeField, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(f.modulus())
}

/// Everything a tester may need; each tester reads the fields it uses.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunRequest {
    #[serde(rename = "modulus", serialize_with = "modulus_string")]
    pub field: PrimeField,
    pub k_max: usize,
    pub degree_log2_bound: u32,
    /// Degree bound of the original polynomial, used by the baseline.
    pub degree_bound: Bound,
    pub target_error: f64,
    /// Fixed trial count; derived from `target_error` when absent.
    pub trials: Option<u32>,
    pub seed: u64,
    pub dim_cap: usize,
    pub threads: usize,
}

pub trait IdentityTester: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Largest matrix dimension the tester would query, if known up front.
    fn dimension(&self, req: &RunRequest) -> Option<usize>;

    /// Whether `k_max` and `degree_log2_bound` of a request are read.
    fn needs_automaton_bounds(&self) -> bool {
        true
    }

    fn run(&self, bb: &dyn BlackBox, req: &RunRequest) -> Result<Verdict, PitError>;
}

pub struct NfaTester;

impl NfaTester {
    pub fn params(req: &RunRequest) -> Result<TestParams, PitError> {
        let params = TestParams::new(req.field.clone(), req.k_max, req.degree_log2_bound, req.target_error, req.seed)?
            .with_threads(req.threads);
        Ok(match req.trials {
            Some(r) => params.with_trials(r),
            None => params,
        })
    }
}

impl IdentityTester for NfaTester {
    fn name(&self) -> &'static str {
        "nfa"
    }

    fn description(&self) -> &'static str {
        "automaton substitution, dimension log2(sparsity) + 1"
    }

    fn dimension(&self, req: &RunRequest) -> Option<usize> {
        Some(req.k_max + 1)
    }

    fn run(&self, bb: &dyn BlackBox, req: &RunRequest) -> Result<Verdict, PitError> {
        nfa_identity_test(bb, &Self::params(req)?)
    }
}

pub struct AlTester;

impl AlTester {
    pub fn params(req: &RunRequest) -> Result<AlParams, PitError> {
        let trials = match (req.trials, req.degree_bound) {
            (Some(r), _) => r,
            (None, Bound::Finite(delta)) => {
                let eps_single_log2 = (delta.max(1) as f64).log2() - req.field.log2_size();
                required_trials_log2(req.target_error.log2(), eps_single_log2)?
            }
            (None, Bound::Huge) => 1,
        };
        Ok(AlParams {
            degree_bound: req.degree_bound,
            field: req.field.clone(),
            trials,
            seed: req.seed,
            dim_cap: req.dim_cap,
            threads: req.threads,
        })
    }
}

impl IdentityTester for AlTester {
    fn name(&self) -> &'static str {
        "al"
    }

    fn description(&self) -> &'static str {
        "random matrices of dimension degree/2 + 1"
    }

    fn needs_automaton_bounds(&self) -> bool {
        false
    }

    fn dimension(&self, req: &RunRequest) -> Option<usize> {
        al_dimension(req.degree_bound)
            .finite()
            .and_then(|d| usize::try_from(d).ok())
    }

    fn run(&self, bb: &dyn BlackBox, req: &RunRequest) -> Result<Verdict, PitError> {
        al_identity_test(bb, &Self::params(req)?)
    }
}

/// Testers by name.
pub struct TesterRegistry {
    testers: BTreeMap<&'static str, Box<dyn IdentityTester>>,
}

impl TesterRegistry {
    pub fn empty() -> Self {
        TesterRegistry {
            testers: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, tester: Box<dyn IdentityTester>) {
        self.testers.insert(tester.name(), tester);
    }

    pub fn get(&self, name: &str) -> Result<&dyn IdentityTester, PitError> {
        self.testers
            .get(name)
            .map(|t| t.as_ref())
            .ok_or_else(|| PitError::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.testers.keys().copied()
    }
}

impl Default for TesterRegistry {
    fn default() -> Self {
        let mut r = TesterRegistry::empty();
        r.register(Box::new(NfaTester));
        r.register(Box::new(AlTester));
        r
    }
}
