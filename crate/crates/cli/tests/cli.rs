use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn ncpit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncpit"))
        .args(args)
        .current_dir(fixtures())
        .env_remove("NCPIT_THREADS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("not json: {l}: {e}")))
        .collect()
}

fn without_timing(mut lines: Vec<Value>) -> Vec<Value> {
    for v in &mut lines {
        if let Value::Object(m) = v {
            m.remove("elapsed_ms");
        }
    }
    lines
}

fn golden(name: &str) -> Vec<Value> {
    fs::read_to_string(fixtures().join(name))
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn zero_circuit_exits_zero() {
    let out = ncpit(&["test", "--circuit", "corpus/zero.circ", "--seed", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("verdict: Zero"));
}

#[test]
fn commutator_exits_one_with_witness() {
    let out = ncpit(&["test", "--circuit", "corpus/commutator.circ", "--log2-sparsity", "1", "--seed", "9"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("verdict: Nonzero"));
    assert!(text.contains("witness: K = 1, dimension 2"));
    // An explicit bound suppresses the derived-bound warning.
    assert!(!stderr(&out).contains("warning"));
}

#[test]
fn saturating_circuit_needs_sparsity_bound() {
    let out = ncpit(&["test", "--circuit", "binomial70.circ", "--seed", "1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--log2-sparsity"));
    let out = ncpit(&["test", "--circuit", "binomial70.circ", "--seed", "1", "--log2-sparsity", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--degree-log2"));
    let out = ncpit(&[
        "test", "--circuit", "binomial70.circ", "--seed", "1", "--log2-sparsity", "3", "--degree-log2", "72",
    ]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));
}

#[test]
fn json_output_matches_golden() {
    for name in ["commutator", "zero"] {
        let path = format!("corpus/{name}.circ");
        let out = ncpit(&["test", "--circuit", &path, "--seed", "5", "--json"]);
        assert!(code(&out) <= 1);
        let lines = without_timing(json_lines(&out));
        assert_eq!(lines, golden(&format!("golden_{name}_seed5.jsonl")), "{name}");
        assert_eq!(lines.first().unwrap()["type"], "config");
        assert_eq!(lines.last().unwrap()["type"], "verdict");
    }
}

#[test]
fn threads_do_not_change_output() {
    let one = ncpit(&["test", "--circuit", "corpus/zero.circ", "--seed", "4", "--json", "--trials", "3"]);
    let four = ncpit(&[
        "test", "--circuit", "corpus/zero.circ", "--seed", "4", "--json", "--trials", "3", "--threads", "4",
    ]);
    let strip = |o: &Output| {
        without_timing(json_lines(o))
            .into_iter()
            .map(|mut v| {
                if let Value::Object(m) = &mut v {
                    m.remove("threads");
                }
                v
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&one), strip(&four));
}

#[test]
fn drawn_seed_is_printed() {
    let out = ncpit(&["test", "--circuit", "corpus/commutator.circ", "--json"]);
    assert_eq!(code(&out), 1);
    let err = stderr(&out);
    let seed: u64 = err
        .lines()
        .find_map(|l| l.strip_prefix("seed: "))
        .and_then(|l| l.split_whitespace().next())
        .and_then(|s| s.parse().ok())
        .expect("seed announced");
    let lines = json_lines(&out);
    assert_eq!(lines[0]["seed"], seed);
    let again = ncpit(&["test", "--circuit", "corpus/commutator.circ", "--json", "--seed", &seed.to_string()]);
    assert_eq!(without_timing(json_lines(&again)), without_timing(lines));
}

#[test]
fn baseline_method() {
    let out = ncpit(&["test", "--circuit", "corpus/commutator.circ", "--method", "al", "--seed", "2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("dimension: up to 2"));
    let out = ncpit(&["test", "--circuit", "corpus/exp40.circ", "--method", "al", "--seed", "2"]);
    assert_eq!(code(&out), 5);
    let out = ncpit(&["test", "--circuit", "corpus/commutator.circ", "--method", "svd"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("al, nfa"));
}

#[test]
fn exponential_degree_instance() {
    let out = ncpit(&["test", "--circuit", "corpus/exp40.circ", "--error", "1e-5", "--seed", "3", "--json"]);
    assert_eq!(code(&out), 1);
    let lines = json_lines(&out);
    let modulus: num_bits::Bits = lines[0]["modulus"].as_str().unwrap().into();
    assert_eq!(modulus.0, 62);
    let out = ncpit(&["test", "--circuit", "corpus/exp40_zero.circ", "--error", "1e-5", "--seed", "3"]);
    assert_eq!(code(&out), 0);
}

mod num_bits {
    /// Bit length of a decimal string.
    pub struct Bits(pub u32);

    impl From<&str> for Bits {
        fn from(s: &str) -> Self {
            let v: u128 = s.parse().unwrap();
            Bits(128 - v.leading_zeros())
        }
    }
}

#[test]
fn error_exit_codes() {
    let out = ncpit(&["test", "--circuit", "missing.circ"]);
    assert_eq!(code(&out), 3);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.circ");
    fs::write(&bad, "ncircuit v1 vars=1\ng0 = mul g0 g0\noutput g0\n").unwrap();
    let out = ncpit(&["test", "--circuit", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("line 2"));
    let out = ncpit(&["test", "--circuit", "corpus/commutator.circ", "--modulus", "100"]);
    assert_eq!(code(&out), 2);
    let out = ncpit(&["test", "--circuit", "corpus/commutator.circ", "--modulus", "7", "--seed", "0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("too small"));
    let out = ncpit(&["test"]);
    assert_eq!(code(&out), 2);
    let out = ncpit(&["expand", "--circuit", "binomial70.circ", "--cap", "1000"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn expand_commutator() {
    let out = ncpit(&["expand", "--circuit", "corpus/commutator.circ"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), fs::read_to_string(fixtures().join("commutator.ncp")).unwrap());
    assert_eq!(stdout(&out).lines().filter(|l| !l.starts_with("ncpoly")).count(), 2);
}

#[test]
fn verify_commutator() {
    let out = ncpit(&["verify", "--poly", "commutator.ncp", "--json"]);
    assert_eq!(code(&out), 0);
    let v = &json_lines(&out)[0];
    assert_eq!(v["k_used"], 1);
    assert_eq!(v["passed"], true);
    assert_eq!(v["entry_nonzero"], true);
    assert_eq!(v["coefficient_matches"], true);
    let out = ncpit(&["verify", "--poly", "commutator.ncp"]);
    assert!(stdout(&out).contains("result: pass"));
}

#[test]
fn isolate_commutator() {
    let out = ncpit(&["isolate", "--poly", "commutator.ncp", "--json"]);
    assert_eq!(code(&out), 0);
    let v = &json_lines(&out)[0];
    assert_eq!(v["words"], 2);
    assert_eq!(v["index_set"], serde_json::json!([3]));
}

#[test]
fn generated_zero_circuit_tests_zero() {
    let dir = tempfile::tempdir().unwrap();
    let circ = dir.path().join("z.circ");
    let out = ncpit(&["gen", "--kind", "zero", "--vars", "3", "--size", "50", "--seed", "11", "--out", circ.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = ncpit(&["test", "--circuit", circ.to_str().unwrap(), "--log2-sparsity", "3", "--seed", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn generated_random_instance_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let circ = dir.path().join("r.circ");
    let poly = dir.path().join("r.ncp");
    let out = ncpit(&[
        "gen", "--kind", "random", "--vars", "3", "--degree", "5", "--terms", "6", "--seed", "8",
        "--out", circ.to_str().unwrap(), "--poly-out", poly.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = ncpit(&["expand", "--circuit", circ.to_str().unwrap()]);
    assert_eq!(stdout(&out), fs::read_to_string(&poly).unwrap());
    let out = ncpit(&["test", "--circuit", circ.to_str().unwrap(), "--log2-sparsity", "3", "--seed", "1"]);
    assert_eq!(code(&out), 1);
    let out = ncpit(&["gen", "--kind", "random", "--vars", "1", "--degree", "2", "--terms", "5", "--seed", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn bench_rows() {
    let out = ncpit(&["bench", "--corpus", "corpus", "--seed", "1", "--json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let rows = json_lines(&out);
    let row = |name: &str| rows.iter().find(|r| r["instance"] == name).unwrap().clone();
    let exp = row("exp40");
    assert_eq!(exp["nfa"]["dim"], 2);
    assert_eq!(exp["nfa"]["verdict"], "Nonzero");
    assert_eq!(exp["al"]["verdict"], "inapplicable");
    let comm = row("commutator");
    assert_eq!((comm["nfa"]["dim"].clone(), comm["al"]["dim"].clone()), (2.into(), 2.into()));
    assert_eq!((comm["nfa"]["verdict"].clone(), comm["al"]["verdict"].clone()), ("Nonzero".into(), "Nonzero".into()));
    let zero = row("zero");
    assert_eq!((zero["nfa"]["verdict"].clone(), zero["al"]["verdict"].clone()), ("Zero".into(), "Zero".into()));

    let out = ncpit(&["bench", "--corpus", "corpus", "--seed", "1"]);
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("instance"));
    assert!(text.contains("inapplicable"));
}
