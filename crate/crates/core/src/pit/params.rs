use num_bigint::BigUint;
use num_traits::{FromPrimitive, One};
use serde::Serialize;

use crate::algebra::primality::next_prime_above;
use crate::algebra::PrimeField;
use crate::circuit::{Bound, Circuit};
use crate::isolate::ceil_log2;

use super::al::DEFAULT_DIM_CAP;
use super::registry::RunRequest;
use super::PitError;

pub const DEFAULT_TARGET_ERROR: f64 = 1e-12;

/// Largest `K_max` that is derived from circuit bounds without the caller
/// confirming it.
pub const MAX_DERIVED_LOG2_SPARSITY: u64 = 64;

const MIN_AUTO_MODULUS_BITS: usize = 61;

/// Parameters of the NFA tester.
#[derive(Clone, Debug, PartialEq)]
pub struct TestParams {
    /// Upper bound on log2 of the sparsity; automaton sizes `0..=k_max` are swept.
    pub k_max: usize,
    /// Upper bound on log2 of the degree after the bivariate encoding.
    pub degree_log2_bound: u32,
    pub target_error: f64,
    pub trials_per_k: u32,
    pub seed: u64,
    pub field: PrimeField,
    /// 1 runs trials sequentially; more uses a thread pool of that size.
    pub threads: usize,
}

impl TestParams {
    /// Trials per `K` are chosen so that the false-Zero bound meets
    /// `target_error`.
    pub fn new(field: PrimeField, k_max: usize, degree_log2_bound: u32, target_error: f64, seed: u64) -> Result<Self, PitError> {
        let mut params = TestParams {
            k_max,
            degree_log2_bound,
            target_error,
            trials_per_k: 1,
            seed,
            field,
            threads: 1,
        };
        params.validate()?;
        params.trials_per_k = required_trials_log2(target_error.log2(), params.eps_single_log2())?;
        Ok(params)
    }

    pub fn with_trials(mut self, trials: u32) -> Self {
        self.trials_per_k = trials;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    /// log2 of the per-trial Schwartz-Zippel bound `D_biv / |F|`.
    pub fn eps_single_log2(&self) -> f64 {
        f64::from(self.degree_log2_bound) - self.field.log2_size()
    }

    /// log2 of `(D_biv / |F|)^r`.
    pub fn error_bound_log2(&self) -> f64 {
        self.eps_single_log2() * f64::from(self.trials_per_k)
    }

    pub fn validate(&self) -> Result<(), PitError> {
        if !(self.target_error > 0.0 && self.target_error < 1.0) {
            return Err(PitError::InvalidParams(format!(
                "target error {} is not in (0, 1)",
                self.target_error
            )));
        }
        if self.trials_per_k == 0 {
            return Err(PitError::InvalidParams("at least one trial per K is needed".into()));
        }
        let d_biv = BigUint::one() << self.degree_log2_bound;
        if self.field.modulus() <= &d_biv {
            return Err(PitError::FieldTooSmall {
                modulus: self.field.modulus().clone(),
                required: d_biv,
            });
        }
        Ok(())
    }
}

/// Smallest `r` with `eps_single^r <= eps_total`.
pub fn required_trials(eps_total: f64, eps_single: f64) -> Result<u32, PitError> {
    if !(eps_single > 0.0 && eps_single < 1.0) {
        return Err(PitError::DegenerateBound { eps_single });
    }
    if !(eps_total > 0.0 && eps_total < 1.0) {
        return Err(PitError::InvalidParams(format!("target error {eps_total} is not in (0, 1)")));
    }
    required_trials_log2(eps_total.log2(), eps_single.log2())
}

pub(crate) fn required_trials_log2(eps_total_log2: f64, eps_single_log2: f64) -> Result<u32, PitError> {
    if !(eps_single_log2 < 0.0) {
        return Err(PitError::DegenerateBound {
            eps_single: eps_single_log2.exp2(),
        });
    }
    // Relative slack so that exact powers (0.1^3 vs 0.001) are not pushed up
    // by rounding.
    let ratio = eps_total_log2 / eps_single_log2;
    let r = (ratio * (1.0 - 1e-12)).ceil().max(1.0);
    if r > f64::from(u32::MAX) {
        return Err(PitError::InvalidParams("required trial count overflows".into()));
    }
    Ok(r as u32)
}

/// Smallest prime exceeding `max(2 D_biv / eps, 2^61)`, with
/// `D_biv = 2^degree_log2`.
pub fn auto_modulus(degree_log2: u32, target_error: f64) -> Result<PrimeField, PitError> {
    if !(target_error > 0.0 && target_error < 1.0) {
        return Err(PitError::InvalidParams(format!("target error {target_error} is not in (0, 1)")));
    }
    let inv = BigUint::from_f64((1.0 / target_error).ceil())
        .ok_or_else(|| PitError::InvalidParams(format!("target error {target_error} too small")))?;
    let bound = (inv << (degree_log2 as usize + 1)).max(BigUint::one() << MIN_AUTO_MODULUS_BITS);
    Ok(PrimeField::new(next_prime_above(&bound)).expect("next_prime_above returns a prime"))
}

/// User choices for a run against an explicit circuit; `None` fields are
/// derived from the circuit.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanOptions {
    pub log2_sparsity: Option<usize>,
    pub degree_log2: Option<u32>,
    pub target_error: f64,
    pub trials: Option<u32>,
    pub seed: u64,
    pub modulus: Option<BigUint>,
    pub dim_cap: usize,
    pub threads: usize,
}

impl Default for PlanOptions {
    fn default() -> Self {
        PlanOptions {
            log2_sparsity: None,
            degree_log2: None,
            target_error: DEFAULT_TARGET_ERROR,
            trials: None,
            seed: 0,
            modulus: None,
            dim_cap: DEFAULT_DIM_CAP,
            threads: 1,
        }
    }
}

/// The effective configuration of a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TestPlan {
    #[serde(flatten)]
    pub request: RunRequest,
    pub syntactic_degree_bound: Bound,
    pub sparsity_log2_bound: Bound,
    pub modulus_auto: bool,
    pub warnings: Vec<String>,
}

/// Fills in every parameter the caller left open.
///
/// * `K_max`: `min(sparsity bound, D * ceil(log2(n + 1)))`, since there are at
///   most `(n + 1)^D` words of length at most `D`. Anything above
///   [`MAX_DERIVED_LOG2_SPARSITY`] is an error. A derived `K_max` comes with a
///   warning: completeness depends on it, soundness does not.
/// * degree: `ceil(log2((n + 2) D))` from the syntactic degree `D`;
///   a saturated `D` is an error.
/// * modulus: [`auto_modulus`].
pub fn plan_for_circuit(circuit: &Circuit, opts: &PlanOptions) -> Result<TestPlan, PitError> {
    let n = u64::from(circuit.nvars());
    let degree = circuit.syntactic_degree_bound();
    let sparsity = circuit.sparsity_log2_bound();
    let mut warnings = Vec::new();

    let k_max = match opts.log2_sparsity {
        Some(k) => k,
        None => {
            let by_words = match degree {
                Bound::Finite(d) => Bound::Finite(d).saturating_mul(Bound::Finite(u64::from(ceil_log2(n + 1)))),
                Bound::Huge => Bound::Huge,
            };
            let derived = sparsity.min(by_words);
            match derived {
                Bound::Finite(k) if k <= MAX_DERIVED_LOG2_SPARSITY => {
                    warnings.push(format!(
                        "no log2-sparsity given; using K_max = {k} derived from circuit bounds. \
                         If the polynomial has more than 2^{k} monomials the test may miss it"
                    ));
                    k as usize
                }
                other => {
                    return Err(PitError::MissingSparsityBound(format!(
                        "derived bound {other} exceeds {MAX_DERIVED_LOG2_SPARSITY}"
                    )))
                }
            }
        }
    };

    let degree_log2 = match (opts.degree_log2, degree) {
        (Some(b), _) => b,
        (None, Bound::Huge) => return Err(PitError::MissingDegreeBound),
        (None, Bound::Finite(d)) => {
            let d_biv = (u128::from(n) + 2) * u128::from(d.max(1));
            let bits = 128 - (d_biv - 1).leading_zeros();
            if d_biv == 1 {
                0
            } else {
                bits
            }
        }
    };

    let (field, modulus_auto) = match &opts.modulus {
        Some(p) => (
            PrimeField::new(p.clone()).map_err(|e| PitError::InvalidParams(e.to_string()))?,
            false,
        ),
        None => (auto_modulus(degree_log2, opts.target_error)?, true),
    };

    Ok(TestPlan {
        request: RunRequest {
            field,
            k_max,
            degree_log2_bound: degree_log2,
            degree_bound: degree,
            target_error: opts.target_error,
            trials: opts.trials,
            seed: opts.seed,
            dim_cap: opts.dim_cap,
            threads: opts.threads.max(1),
        },
        syntactic_degree_bound: degree,
        sparsity_log2_bound: sparsity,
        modulus_auto,
        warnings,
    })
}
