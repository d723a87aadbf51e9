//! The `ncircuit v1` text format.
//!
//! ```text
//! ncircuit v1 vars=2
//! g0 = var z1
//! g1 = var z2
//! g2 = mul g0 g1      # left operand first
//! output g2
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{Circuit, CircuitError, Gate};

fn syntax(line: usize, message: impl Into<String>) -> CircuitError {
    CircuitError::Syntax {
        line,
        message: message.into(),
    }
}

fn gate_label(line: usize, tok: &str) -> Result<u64, CircuitError> {
    tok.strip_prefix('g')
        .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| syntax(line, format!("expected a gate id like g3, found `{tok}`")))
}

enum RawGate {
    Var(u32),
    Const(BigInt),
    Add(u64, u64),
    Mul(u64, u64),
}

/// Parses and validates a circuit. Operands must be declared on an earlier
/// line; a gate that reaches itself is reported as a cycle.
pub fn parse_circuit(text: &str) -> Result<Circuit, CircuitError> {
    let mut nvars = None;
    let mut decls: Vec<(usize, u64, RawGate)> = Vec::new();
    let mut output: Option<(usize, u64)> = None;

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(nvars) = nvars else {
            match tokens.as_slice() {
                ["ncircuit", "v1", vars] => {
                    let n = vars
                        .strip_prefix("vars=")
                        .and_then(|v| v.parse::<u32>().ok())
                        .ok_or_else(|| syntax(line_no, format!("bad vars field `{vars}`")))?;
                    nvars = Some(n);
                }
                _ => return Err(syntax(line_no, "expected header `ncircuit v1 vars=<n>`")),
            }
            continue;
        };
        if output.is_some() {
            return Err(syntax(line_no, "nothing may follow the output line"));
        }
        match tokens.as_slice() {
            ["output", g] => output = Some((line_no, gate_label(line_no, g)?)),
            [g, "=", rest @ ..] => {
                let label = gate_label(line_no, g)?;
                let gate = match rest {
                    ["var", v] => {
                        let i = v
                            .strip_prefix('z')
                            .and_then(|d| d.parse::<u32>().ok())
                            .ok_or_else(|| syntax(line_no, format!("bad variable `{v}`")))?;
                        if i < 1 || i > nvars {
                            return Err(CircuitError::BadReference {
                                line: line_no,
                                message: format!("variable {v} outside z1..z{nvars}"),
                            });
                        }
                        RawGate::Var(i)
                    }
                    ["const", c] => RawGate::Const(
                        c.parse()
                            .map_err(|_| syntax(line_no, format!("bad constant `{c}`")))?,
                    ),
                    [op @ ("add" | "mul"), a, b] => {
                        let (a, b) = (gate_label(line_no, a)?, gate_label(line_no, b)?);
                        if *op == "add" {
                            RawGate::Add(a, b)
                        } else {
                            RawGate::Mul(a, b)
                        }
                    }
                    [op @ ("add" | "mul"), ..] => {
                        return Err(syntax(line_no, format!("`{op}` takes exactly two operands")))
                    }
                    _ => return Err(syntax(line_no, "unrecognized gate definition")),
                };
                decls.push((line_no, label, gate));
            }
            _ => return Err(syntax(line_no, "unrecognized line")),
        }
    }

    let nvars = nvars.ok_or_else(|| syntax(1, "missing header"))?;
    let (out_line, out_label) = output.ok_or_else(|| syntax(text.lines().count().max(1), "missing output line"))?;

    let mut position: HashMap<u64, usize> = HashMap::new();
    for (i, (line, label, _)) in decls.iter().enumerate() {
        if position.insert(*label, i).is_some() {
            return Err(syntax(*line, format!("gate g{label} declared twice")));
        }
    }

    let mut gates = Vec::with_capacity(decls.len());
    let mut labels = Vec::with_capacity(decls.len());
    for (i, (line, label, raw)) in decls.iter().enumerate() {
        let resolve = |op: u64| -> Result<usize, CircuitError> {
            match position.get(&op) {
                None => Err(CircuitError::BadReference {
                    line: *line,
                    message: format!("gate g{op} is never declared"),
                }),
                Some(&j) if j < i => Ok(j),
                Some(&j) if j == i || reaches(&decls, &position, j, i) => Err(CircuitError::Cycle {
                    line: *line,
                    gate: format!("g{label}"),
                }),
                Some(_) => Err(CircuitError::BadReference {
                    line: *line,
                    message: format!("gate g{op} is used before its declaration"),
                }),
            }
        };
        let gate = match raw {
            RawGate::Var(v) => Gate::Var(*v),
            RawGate::Const(c) => Gate::Const(c.clone()),
            RawGate::Add(a, b) => Gate::Add(resolve(*a)?, resolve(*b)?),
            RawGate::Mul(a, b) => Gate::Mul(resolve(*a)?, resolve(*b)?),
        };
        gates.push(gate);
        labels.push(*label);
    }

    let output = *position.get(&out_label).ok_or_else(|| CircuitError::BadReference {
        line: out_line,
        message: format!("output gate g{out_label} is never declared"),
    })?;

    Ok(Circuit {
        nvars,
        gates,
        labels,
        output,
    })
}

/// Whether declaration `from` depends (transitively) on declaration `target`.
fn reaches(decls: &[(usize, u64, RawGate)], position: &HashMap<u64, usize>, from: usize, target: usize) -> bool {
    let mut stack = vec![from];
    let mut seen = vec![false; decls.len()];
    while let Some(i) = stack.pop() {
        if i == target {
            return true;
        }
        if std::mem::replace(&mut seen[i], true) {
            continue;
        }
        if let RawGate::Add(a, b) | RawGate::Mul(a, b) = decls[i].2 {
            stack.extend([a, b].iter().filter_map(|l| position.get(l).copied()));
        }
    }
    false
}

pub fn write_circuit(c: &Circuit) -> String {
    let mut out = format!("ncircuit v1 vars={}\n", c.nvars);
    let label = |i: usize| c.labels[i];
    for (i, g) in c.gates.iter().enumerate() {
        let _ = match g {
            Gate::Var(v) => writeln!(out, "g{} = var z{v}", label(i)),
            Gate::Const(k) => writeln!(out, "g{} = const {k}", label(i)),
            Gate::Add(a, b) => writeln!(out, "g{} = add g{} g{}", label(i), label(*a), label(*b)),
            Gate::Mul(a, b) => writeln!(out, "g{} = mul g{} g{}", label(i), label(*a), label(*b)),
        };
    }
    writeln!(out, "output g{}", label(c.output)).unwrap();
    out
}
