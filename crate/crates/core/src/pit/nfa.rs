use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::algebra::{FieldElem, Matrix, PrimeField, Ring};
use crate::autmat::{build_substitution_matrices, encoded_variable_matrices, random_assignment};
use crate::circuit::{BlackBox, BoxError};

use super::params::TestParams;
use super::seeds::trial_seed;
use super::verdict::{Outcome, TrialRecord, Verdict, Witness};
use super::PitError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    /// First nonzero output entry in row-major order.
    pub nonzero: Option<(usize, usize, FieldElem)>,
    /// Hex prefix of a SHA-256 over the output matrix.
    pub digest: String,
}

/// Draws one assignment for automaton size `k`, queries the box at the
/// encoded variable matrices and inspects every entry of the answer.
pub fn single_trial<B: BlackBox + ?Sized, G: rand::Rng + ?Sized>(
    bb: &B,
    k: usize,
    field: &PrimeField,
    rng: &mut G,
) -> Result<TrialOutcome, BoxError> {
    let assignment = random_assignment(k, field, rng);
    let sm = build_substitution_matrices(field, &assignment);
    let inputs = encoded_variable_matrices(field, &sm, bb.nvars());
    let out = bb.evaluate(field, &inputs)?;
    Ok(inspect(field, &out))
}

pub(crate) fn inspect(field: &PrimeField, out: &Matrix<FieldElem>) -> TrialOutcome {
    let mut hasher = Sha256::new();
    hasher.update((out.dim() as u64).to_le_bytes());
    let mut nonzero = None;
    for (r, c, v) in out.iter() {
        let bytes = PrimeField::digest_bytes(v);
        hasher.update((bytes.len() as u32).to_le_bytes());
        hasher.update(&bytes);
        if nonzero.is_none() && !field.is_zero(v) {
            nonzero = Some((r, c, v.clone()));
        }
    }
    let hash = hasher.finalize();
    let digest = hash[..8].iter().map(|b| format!("{b:02x}")).collect();
    TrialOutcome { nonzero, digest }
}

/// Runs trial `t` of stream `stream` from its own seed.
pub(crate) fn run_seeded<F>(seed: u64, trial: u32, stream: u64, f: F) -> (u64, Result<TrialOutcome, BoxError>)
where
    F: FnOnce(&mut ChaCha20Rng) -> Result<TrialOutcome, BoxError>,
{
    let s = trial_seed(seed, stream, u64::from(trial));
    let mut rng = ChaCha20Rng::seed_from_u64(s);
    (s, f(&mut rng))
}

/// Runs `trials` trials of one stream, sequentially or on `pool`, and
/// returns them in trial order, cut after the first nonzero one. The result
/// does not depend on the thread count.
pub(crate) fn run_stream<F>(
    pool: Option<&rayon::ThreadPool>,
    seed: u64,
    stream: u64,
    trials: u32,
    f: F,
) -> Vec<(u32, u64, Result<TrialOutcome, BoxError>)>
where
    F: Fn(&mut ChaCha20Rng) -> Result<TrialOutcome, BoxError> + Sync,
{
    let one = |t: u32| {
        let (s, r) = run_seeded(seed, t, stream, &f);
        (t, s, r)
    };
    let mut out = Vec::new();
    match pool {
        None => {
            for t in 0..trials {
                let rec = one(t);
                let stop = !matches!(&rec.2, Ok(o) if o.nonzero.is_none());
                out.push(rec);
                if stop {
                    break;
                }
            }
        }
        Some(pool) => {
            let all: Vec<_> = pool.install(|| (0..trials).into_par_iter().map(one).collect());
            for rec in all {
                let stop = !matches!(&rec.2, Ok(o) if o.nonzero.is_none());
                out.push(rec);
                if stop {
                    break;
                }
            }
        }
    }
    out
}

pub(crate) fn thread_pool(threads: usize) -> Result<Option<rayon::ThreadPool>, PitError> {
    if threads <= 1 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| PitError::InvalidParams(format!("cannot start {threads} threads: {e}")))
}

/// The NFA-substitution tester: for `K = 0, 1, ..., K_max`, run
/// `trials_per_k` independent trials with `(K + 1) x (K + 1)` matrices and
/// report Nonzero at the first nonzero output entry.
pub fn nfa_identity_test<B: BlackBox + ?Sized>(bb: &B, params: &TestParams) -> Result<Verdict, PitError> {
    params.validate()?;
    let field = &params.field;
    let pool = thread_pool(params.threads)?;
    let mut transcript = Vec::new();
    let mut witness = None;

    'sweep: for k in 0..=params.k_max {
        let dim = k + 1;
        let records = run_stream(pool.as_ref(), params.seed, k as u64, params.trials_per_k, |rng| {
            single_trial(bb, k, field, rng)
        });
        for (trial, seed, result) in records {
            let outcome = result.map_err(|e| PitError::from_box(dim, e))?;
            transcript.push(TrialRecord {
                k: Some(k),
                dim,
                trial,
                seed,
                nonzero: outcome.nonzero.is_some(),
                digest: outcome.digest,
            });
            if let Some((row, col, value)) = outcome.nonzero {
                witness = Some(Witness {
                    k: Some(k),
                    dim,
                    trial,
                    seed,
                    row,
                    col,
                    value,
                });
                break 'sweep;
            }
        }
    }

    let error_bound_log2 = params.error_bound_log2();
    Ok(Verdict {
        method: "nfa".into(),
        outcome: if witness.is_some() { Outcome::Nonzero } else { Outcome::Zero },
        witness,
        transcript,
        error_bound: error_bound_log2.exp2(),
        error_bound_log2,
        trials_per_dim: params.trials_per_k,
        max_dim: params.k_max + 1,
    })
}
