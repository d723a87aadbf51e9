use serde::Serialize;

use crate::algebra::FieldElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Zero,
    Nonzero,
}

/// Where a nonzero entry was found, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Automaton size for the NFA tester, absent for the baseline.
    pub k: Option<usize>,
    pub dim: usize,
    pub trial: u32,
    pub seed: u64,
    pub row: usize,
    pub col: usize,
    pub value: FieldElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub k: Option<usize>,
    pub dim: usize,
    pub trial: u32,
    pub seed: u64,
    pub nonzero: bool,
    pub digest: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub method: String,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    /// Trials in (K, trial) order, up to and including the witness.
    pub transcript: Vec<TrialRecord>,
    /// Bound on the probability that a nonzero polynomial is reported Zero.
    pub error_bound: f64,
    pub error_bound_log2: f64,
    pub trials_per_dim: u32,
    pub max_dim: usize,
}

impl Verdict {
    pub fn is_zero(&self) -> bool {
        self.outcome == Outcome::Zero
    }

    pub fn is_nonzero(&self) -> bool {
        self.outcome == Outcome::Nonzero
    }
}
