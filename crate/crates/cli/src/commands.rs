use std::time::Instant;

use serde_json::{json, Value};

use ncpit::algebra::PrimeField;
use ncpit::circuit::{expand_to_sparse, gen as generate, write_circuit, Circuit};
use ncpit::isolate::{ceil_log2, isolating_index_set};
use ncpit::ncpoly::{write_ncpoly, Alphabet};
use ncpit::pit::{plan_for_circuit, symbolic_theorem_check, IdentityTester, PlanOptions, TestPlan, TesterRegistry, Verdict};

use crate::error::CliError;
use crate::io;
use crate::{ExpandArgs, GenArgs, GenKind, PolyArgs, TestArgs};

/// Entry polynomials with more terms are summarized rather than printed.
const MAX_PRINTED_TERMS: usize = 40;

/// Fills in the options a tester will not read, so that a missing bound
/// only fails the methods that need it.
pub fn options_for(tester: &dyn IdentityTester, mut opts: PlanOptions) -> PlanOptions {
    if !tester.needs_automaton_bounds() {
        opts.log2_sparsity.get_or_insert(0);
        opts.degree_log2.get_or_insert(0);
    }
    opts
}

fn verdict_exit(v: &Verdict) -> u8 {
    if v.is_zero() {
        0
    } else {
        1
    }
}

pub fn json_line(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("values serialize"));
}

fn tagged(kind: &str, value: impl serde::Serialize) -> Value {
    let mut v = serde_json::to_value(value).expect("values serialize");
    if let Value::Object(map) = &mut v {
        map.insert("type".into(), kind.into());
    }
    v
}

fn print_json(circuit: &Circuit, path: &str, plan: &TestPlan, v: &Verdict, elapsed_ms: f64) {
    let mut config = tagged("config", plan);
    config["method"] = v.method.clone().into();
    config["circuit"] = path.into();
    config["gates"] = circuit.size().into();
    config["nvars"] = circuit.nvars().into();
    json_line(&config);
    for t in &v.transcript {
        json_line(&tagged("trial", t));
    }
    json_line(&json!({
        "type": "verdict",
        "method": v.method,
        "outcome": v.outcome,
        "witness": v.witness,
        "error_bound": v.error_bound,
        "error_bound_log2": v.error_bound_log2,
        "trials_per_dim": v.trials_per_dim,
        "max_dim": v.max_dim,
        "elapsed_ms": elapsed_ms,
    }));
}

fn print_report(circuit: &Circuit, path: &str, tester: &dyn IdentityTester, plan: &TestPlan, v: &Verdict, elapsed_ms: f64) {
    let req = &plan.request;
    println!("circuit: {path} ({} gates, {} variables)", circuit.size(), circuit.nvars());
    println!("method: {} ({})", tester.name(), tester.description());
    println!(
        "modulus: {} ({} bits{})",
        req.field.modulus(),
        req.field.bits(),
        if plan.modulus_auto { ", chosen automatically" } else { "" }
    );
    println!("seed: {}", req.seed);
    if tester.needs_automaton_bounds() {
        println!("K_max: {}, degree bound 2^{}", req.k_max, req.degree_log2_bound);
    } else {
        println!("degree bound: {}", req.degree_bound);
    }
    println!("dimension: up to {}, trials per dimension: {}", v.max_dim, v.trials_per_dim);
    println!("verdict: {:?}", v.outcome);
    if let Some(w) = &v.witness {
        let k = w.k.map(|k| format!("K = {k}, ")).unwrap_or_default();
        println!(
            "witness: {k}dimension {}, trial {}, seed {}: entry ({}, {}) = {}",
            w.dim, w.trial, w.seed, w.row, w.col, w.value
        );
    } else {
        println!(
            "error bound: {:.3e} (2^{:.2}) that a nonzero polynomial is reported Zero",
            v.error_bound, v.error_bound_log2
        );
    }
    println!("elapsed: {elapsed_ms:.3} ms");
}

pub fn test(a: &TestArgs) -> Result<u8, CliError> {
    let circuit = io::read_circuit(&a.circuit)?;
    let registry = TesterRegistry::default();
    let tester = registry.get(&a.method).map_err(|_| {
        let names: Vec<_> = registry.names().collect();
        CliError::Usage(format!("unknown method `{}` (available: {})", a.method, names.join(", ")))
    })?;
    let seed = io::resolve_seed(a.run.seed);
    let opts = options_for(tester, io::plan_options(&a.run, seed)?);
    let plan = plan_for_circuit(&circuit, &opts)?;
    if tester.needs_automaton_bounds() {
        for w in &plan.warnings {
            eprintln!("warning: {w}");
        }
    }
    let start = Instant::now();
    let verdict = tester.run(&circuit, &plan.request)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let path = a.circuit.display().to_string();
    if a.json {
        print_json(&circuit, &path, &plan, &verdict, elapsed_ms);
    } else {
        print_report(&circuit, &path, tester, &plan, &verdict, elapsed_ms);
    }
    Ok(verdict_exit(&verdict))
}

pub fn expand(a: &ExpandArgs) -> Result<u8, CliError> {
    let circuit = io::read_circuit(&a.circuit)?;
    let poly = expand_to_sparse(&circuit, a.cap)?;
    io::emit(a.out.as_deref(), &write_ncpoly(&poly))?;
    Ok(0)
}

pub fn verify(a: &PolyArgs) -> Result<u8, CliError> {
    let poly = io::read_poly(&a.poly)?;
    let r = symbolic_theorem_check(&poly)?;
    let small = r.entry_poly.num_terms() <= MAX_PRINTED_TERMS;
    if a.json {
        let mut v = serde_json::to_value(&r).expect("report serializes");
        if !small {
            v["entry_poly"] = Value::Null;
        }
        v["entry_terms"] = r.entry_poly.num_terms().into();
        v["passed"] = r.passed().into();
        json_line(&v);
    } else {
        println!("K: {}", r.k_used);
        println!("encoded degree: {}", r.degree);
        println!("isolated word: {}", r.isolated_word);
        println!("index set: {:?}", r.index_set.positions());
        println!("monomial: {}", r.isolated_monomial);
        if small {
            println!("entry (0, K): {}", r.entry_poly);
        } else {
            println!("entry (0, K): {} terms", r.entry_poly.num_terms());
        }
        println!("entry nonzero: {}", if r.entry_nonzero { "yes" } else { "NO" });
        println!(
            "coefficient: {} (expected {}){}",
            r.entry_coefficient,
            r.expected_coefficient,
            if r.coefficient_matches { "" } else { " MISMATCH" }
        );
        println!("result: {}", if r.passed() { "pass" } else { "FAIL" });
    }
    Ok(if r.passed() { 0 } else { 1 })
}

pub fn isolate(a: &PolyArgs) -> Result<u8, CliError> {
    let poly = io::read_poly(&a.poly)?;
    let encoded = match poly.alphabet() {
        Alphabet::Z => poly.encode_bivariate(),
        Alphabet::X => poly,
    };
    let top = encoded.max_degree_set()?;
    let r = isolating_index_set(&top.words).map_err(ncpit::pit::PitError::from)?;
    let bound = ceil_log2(top.words.len() as u64);
    if a.json {
        json_line(&json!({
            "degree": top.degree,
            "words": top.words.len(),
            "bound": bound,
            "index_set": r.index_set,
            "isolated": r.isolated,
            "trace": r.trace,
        }));
    } else {
        println!("top-degree words: {} of length {}", top.words.len(), top.degree);
        for step in &r.trace {
            println!(
                "position {}: keep x{} side, {} left",
                step.position, step.kept_bit, step.surviving
            );
        }
        println!("index set: {:?} (size {}, bound {bound})", r.index_set.positions(), r.index_set.len());
        println!("isolated word: {}", r.isolated);
    }
    Ok(0)
}

pub fn gen(a: &GenArgs) -> Result<u8, CliError> {
    if a.poly_out.is_some() && a.kind != GenKind::Random {
        return Err(CliError::Usage("--poly-out is only available with --kind random".into()));
    }
    let mut poly = None;
    let circuit = match a.kind {
        GenKind::Random => {
            let field = match io::parse_modulus(a.modulus.as_deref())? {
                Some(p) => PrimeField::new(p).map_err(|e| CliError::Usage(e.to_string()))?,
                None => PrimeField::mersenne61(),
            };
            let seed = io::resolve_seed(a.seed);
            let (c, p) = generate::gen_random_instance(a.vars, a.degree, a.terms, seed, &field)?;
            poly = Some(p);
            c
        }
        GenKind::Zero => {
            if a.vars == 0 {
                return Err(CliError::Usage("--vars must be at least 1".into()));
            }
            generate::gen_zero_circuit(a.vars, a.size, io::resolve_seed(a.seed))
        }
        GenKind::PowerSum => {
            if a.vars == 0 {
                return Err(CliError::Usage("--vars must be at least 1".into()));
            }
            generate::power_sum(a.vars, a.stages)
        }
        GenKind::Binomial => generate::binomial_power(a.stages),
        GenKind::Commutator => generate::commutator(),
    };
    let circuit = if a.difference {
        poly = poly.map(|p| p.sub(&p));
        generate::difference_with_self(&circuit)
    } else {
        circuit
    };
    io::emit(a.out.as_deref(), &write_circuit(&circuit))?;
    if let (Some(path), Some(p)) = (&a.poly_out, &poly) {
        io::emit(Some(path), &write_ncpoly(p))?;
    }
    Ok(0)
}
