use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use ncpit::pit::{plan_for_circuit, PitError, TesterRegistry};

use crate::commands::{json_line, options_for};
use crate::error::CliError;
use crate::io;
use crate::BenchArgs;

#[derive(Serialize)]
struct Cell {
    dim: Option<usize>,
    verdict: String,
    ms: Option<f64>,
}

impl Cell {
    fn dim_text(&self) -> String {
        self.dim.map_or("-".into(), |d| d.to_string())
    }

    fn ms_text(&self) -> String {
        self.ms.map_or("-".into(), |m| format!("{m:.2}"))
    }
}

fn corpus_files(dir: &PathBuf) -> Result<Vec<PathBuf>, CliError> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| CliError::io(dir, e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "circ"))
        .collect();
    files.sort();
    Ok(files)
}

pub fn bench(a: &BenchArgs) -> Result<u8, CliError> {
    let files = corpus_files(&a.corpus)?;
    let registry = TesterRegistry::default();
    let seed = io::resolve_seed(a.run.seed);
    let base = io::plan_options(&a.run, seed)?;
    let mut rows = Vec::new();

    for path in &files {
        let circuit = io::read_circuit(path)?;
        let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
        let mut cells = Vec::new();
        for method in ["nfa", "al"] {
            let tester = registry.get(method)?;
            let cell = match plan_for_circuit(&circuit, &options_for(tester, base.clone())) {
                Err(e) => Cell {
                    dim: None,
                    verdict: format!("error: {e}"),
                    ms: None,
                },
                Ok(plan) => {
                    let start = Instant::now();
                    let result = tester.run(&circuit, &plan.request);
                    let ms = start.elapsed().as_secs_f64() * 1e3;
                    match result {
                        Ok(v) => Cell {
                            dim: Some(v.max_dim),
                            verdict: format!("{:?}", v.outcome),
                            ms: Some(ms),
                        },
                        Err(PitError::DimTooLarge { .. }) => Cell {
                            dim: None,
                            verdict: "inapplicable".into(),
                            ms: None,
                        },
                        Err(e) => Cell {
                            dim: tester.dimension(&plan.request),
                            verdict: format!("error: {e}"),
                            ms: None,
                        },
                    }
                }
            };
            cells.push(cell);
        }
        rows.push((name, circuit.size(), cells));
    }

    if a.json {
        for (name, gates, cells) in &rows {
            json_line(&json!({
                "instance": name,
                "gates": gates,
                "nfa": cells[0],
                "al": cells[1],
            }));
        }
        return Ok(0);
    }

    let header = ["instance", "gates", "nfa dim", "nfa verdict", "nfa ms", "al dim", "al verdict", "al ms"];
    let table: Vec<[String; 8]> = rows
        .iter()
        .map(|(name, gates, c)| {
            [
                name.clone(),
                gates.to_string(),
                c[0].dim_text(),
                c[0].verdict.clone(),
                c[0].ms_text(),
                c[1].dim_text(),
                c[1].verdict.clone(),
                c[1].ms_text(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &table {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        println!("{}", parts.join("  ").trim_end());
    };
    line(header.to_vec());
    for row in &table {
        line(row.iter().map(String::as_str).collect());
    }
    Ok(0)
}
