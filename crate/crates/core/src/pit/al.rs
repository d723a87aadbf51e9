use num_bigint::BigUint;

use crate::algebra::{Matrix, PrimeField};
use crate::circuit::{BlackBox, Bound};

use super::nfa::{inspect, run_stream, thread_pool};
use super::verdict::{Outcome, TrialRecord, Verdict, Witness};
use super::PitError;

/// Largest baseline matrix dimension attempted unless the caller raises it.
pub const DEFAULT_DIM_CAP: usize = 64;

/// Seed stream of the baseline, disjoint from every automaton size.
const AL_STREAM: u64 = u32::MAX as u64;

#[derive(Clone, Debug, PartialEq)]
pub struct AlParams {
    /// Upper bound `Delta` on the degree of the polynomial.
    pub degree_bound: Bound,
    pub field: PrimeField,
    pub trials: u32,
    pub seed: u64,
    pub dim_cap: usize,
    pub threads: usize,
}

/// `floor(Delta / 2) + 1`: no nonzero polynomial of degree `Delta` vanishes
/// on all `d x d` matrices once `2d > Delta`.
pub fn al_dimension(degree_bound: Bound) -> Bound {
    match degree_bound {
        Bound::Finite(delta) => Bound::Finite(delta / 2 + 1),
        Bound::Huge => Bound::Huge,
    }
}

/// The baseline tester: `trials` evaluations at independent uniformly random
/// `d x d` matrices.
pub fn al_identity_test<B: BlackBox + ?Sized>(bb: &B, params: &AlParams) -> Result<Verdict, PitError> {
    let dim = match al_dimension(params.degree_bound) {
        Bound::Finite(d) if d <= params.dim_cap as u64 => d as usize,
        other => {
            return Err(PitError::DimTooLarge {
                required: other.to_string(),
                cap: params.dim_cap,
            })
        }
    };
    let delta = params.degree_bound.finite().expect("finite when the dimension is");
    let field = &params.field;
    if field.modulus() <= &BigUint::from(delta) {
        return Err(PitError::FieldTooSmall {
            modulus: field.modulus().clone(),
            required: BigUint::from(delta),
        });
    }
    if params.trials == 0 {
        return Err(PitError::InvalidParams("at least one trial is needed".into()));
    }
    let pool = thread_pool(params.threads)?;
    let nvars = bb.nvars();
    let records = run_stream(pool.as_ref(), params.seed, AL_STREAM, params.trials, |rng| {
        let inputs: Vec<_> = (0..nvars)
            .map(|_| Matrix::from_fn(dim, |_, _| field.sample(rng, false)))
            .collect();
        let out = bb.evaluate(field, &inputs)?;
        Ok(inspect(field, &out))
    });

    let mut transcript = Vec::new();
    let mut witness = None;
    for (trial, seed, result) in records {
        let outcome = result.map_err(|e| PitError::from_box(dim, e))?;
        transcript.push(TrialRecord {
            k: None,
            dim,
            trial,
            seed,
            nonzero: outcome.nonzero.is_some(),
            digest: outcome.digest,
        });
        if let Some((row, col, value)) = outcome.nonzero {
            witness = Some(Witness {
                k: None,
                dim,
                trial,
                seed,
                row,
                col,
                value,
            });
        }
    }

    let eps_single_log2 = (delta.max(1) as f64).log2() - field.log2_size();
    let error_bound_log2 = eps_single_log2 * f64::from(params.trials);
    Ok(Verdict {
        method: "al".into(),
        outcome: if witness.is_some() { Outcome::Nonzero } else { Outcome::Zero },
        witness,
        transcript,
        error_bound: error_bound_log2.exp2(),
        error_bound_log2,
        trials_per_dim: params.trials,
        max_dim: dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::gen;

    fn params(delta: Bound, seed: u64) -> AlParams {
        AlParams {
            degree_bound: delta,
            field: PrimeField::mersenne61(),
            trials: 5,
            seed,
            dim_cap: DEFAULT_DIM_CAP,
            threads: 1,
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(al_dimension(Bound::Finite(0)), Bound::Finite(1));
        assert_eq!(al_dimension(Bound::Finite(2)), Bound::Finite(2));
        assert_eq!(al_dimension(Bound::Finite(3)), Bound::Finite(2));
        assert_eq!(al_dimension(Bound::Finite(1 << 40)), Bound::Finite((1 << 39) + 1));
        assert_eq!(al_dimension(Bound::Huge), Bound::Huge);
    }

    #[test]
    fn commutator_needs_dimension_two() {
        let v = al_identity_test(&gen::commutator(), &params(Bound::Finite(2), 3)).unwrap();
        assert!(v.is_nonzero());
        assert_eq!(v.max_dim, 2);
        assert_eq!(v.witness.unwrap().k, None);
        // A 1 x 1 baseline is commutative and cannot see the commutator.
        let v = al_identity_test(&gen::commutator(), &params(Bound::Finite(1), 3)).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn refuses_large_dimensions() {
        let c = gen::power_sum(2, 40);
        let p = params(c.syntactic_degree_bound(), 0);
        assert!(matches!(al_identity_test(&c, &p), Err(PitError::DimTooLarge { .. })));
        let p = params(Bound::Huge, 0);
        assert!(matches!(al_identity_test(&c, &p), Err(PitError::DimTooLarge { .. })));
    }

    #[test]
    fn refuses_small_fields() {
        let mut p = params(Bound::Finite(4), 0);
        p.field = PrimeField::from_u64(3).unwrap();
        assert!(matches!(
            al_identity_test(&gen::commutator(), &p),
            Err(PitError::FieldTooSmall { .. })
        ));
    }
}
