use std::fs;
use std::path::Path;

use num_bigint::BigUint;

use ncpit::circuit::{parse_circuit, Circuit};
use ncpit::ncpoly::{parse_ncpoly, SparseNCPoly};
use ncpit::pit::PlanOptions;

use crate::error::CliError;
use crate::RunArgs;

pub const THREADS_ENV: &str = "NCPIT_THREADS";

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn read_circuit(path: &Path) -> Result<Circuit, CliError> {
    parse_circuit(&read(path)?).map_err(|e| CliError::parse(path, e))
}

pub fn read_poly(path: &Path) -> Result<SparseNCPoly, CliError> {
    parse_ncpoly(&read(path)?).map_err(|e| CliError::parse(path, e))
}

/// Writes to `path`, or stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// The given seed, or a fresh one announced on stderr so the run can be
/// repeated.
pub fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let s = rand::random();
        eprintln!("seed: {s} (drawn; pass --seed {s} to repeat)");
        s
    })
}

pub fn parse_modulus(text: Option<&str>) -> Result<Option<BigUint>, CliError> {
    text.map(|t| {
        t.parse::<BigUint>()
            .map_err(|_| CliError::Usage(format!("--modulus `{t}` is not a positive integer")))
    })
    .transpose()
}

pub fn threads(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n.max(1));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|n| n.max(1))
            .map_err(|_| CliError::Usage(format!("{THREADS_ENV}=`{v}` is not a thread count"))),
        Err(_) => Ok(1),
    }
}

pub fn plan_options(run: &RunArgs, seed: u64) -> Result<PlanOptions, CliError> {
    Ok(PlanOptions {
        log2_sparsity: run.log2_sparsity,
        degree_log2: run.degree_log2,
        target_error: run.error,
        trials: run.trials,
        seed,
        modulus: parse_modulus(run.modulus.as_deref())?,
        dim_cap: run.dim_cap,
        threads: threads(run.threads)?,
    })
}
