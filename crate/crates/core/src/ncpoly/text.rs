//! Line-oriented text format for sparse polynomials.
//!
//! ```text
//! ncpoly v1 vars=2 alphabet=z
//! # commutator
//! 1 z1 z2
//! -1 z2 z1
//! ```
//!
//! A line with only a coefficient is the constant term.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{Alphabet, NcPolyError, SparseNCPoly, Word};

fn syntax(line: usize, message: impl Into<String>) -> NcPolyError {
    NcPolyError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_header(line_no: usize, line: &str) -> Result<(Alphabet, u32), NcPolyError> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("ncpoly") || tokens.next() != Some("v1") {
        return Err(syntax(line_no, "expected header `ncpoly v1 vars=<n> alphabet=<z|x>`"));
    }
    let mut vars = None;
    let mut alphabet = None;
    for tok in tokens {
        match tok.split_once('=') {
            Some(("vars", v)) => {
                vars = Some(v.parse::<u32>().map_err(|_| syntax(line_no, format!("bad vars `{v}`")))?)
            }
            Some(("alphabet", "z")) => alphabet = Some(Alphabet::Z),
            Some(("alphabet", "x")) => alphabet = Some(Alphabet::X),
            _ => return Err(syntax(line_no, format!("unexpected header field `{tok}`"))),
        }
    }
    let vars = vars.ok_or_else(|| syntax(line_no, "header is missing vars="))?;
    let alphabet = alphabet.ok_or_else(|| syntax(line_no, "header is missing alphabet="))?;
    if alphabet == Alphabet::X && vars != 2 {
        return Err(syntax(line_no, "the x alphabet has exactly 2 variables"));
    }
    Ok((alphabet, vars))
}

fn parse_symbol(line_no: usize, alphabet: Alphabet, tok: &str) -> Result<u32, NcPolyError> {
    let prefix = match alphabet {
        Alphabet::Z => 'z',
        Alphabet::X => 'x',
    };
    tok.strip_prefix(prefix)
        .and_then(|s| s.parse::<u32>().ok())
        .ok_or_else(|| syntax(line_no, format!("bad symbol `{tok}` for alphabet {alphabet}")))
}

pub fn parse_ncpoly(text: &str) -> Result<SparseNCPoly, NcPolyError> {
    let mut header = None;
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let Some((alphabet, _)) = header else {
            header = Some(parse_header(line_no, line)?);
            continue;
        };
        let mut tokens = line.split_whitespace();
        let coeff_tok = tokens.next().unwrap();
        let coeff: BigInt = coeff_tok
            .parse()
            .map_err(|_| syntax(line_no, format!("bad coefficient `{coeff_tok}`")))?;
        let symbols = tokens
            .map(|t| parse_symbol(line_no, alphabet, t))
            .collect::<Result<Vec<_>, _>>()?;
        raw.push((line_no, coeff, Word::new(alphabet, symbols)));
    }
    let (alphabet, nvars) = header.ok_or_else(|| syntax(1, "missing header"))?;
    let mut poly = SparseNCPoly::zero(alphabet, nvars);
    for (line_no, c, w) in raw {
        poly.check_word(&w).map_err(|e| syntax(line_no, e.to_string()))?;
        poly.add_term(c, w);
    }
    Ok(poly)
}

pub fn write_ncpoly(poly: &SparseNCPoly) -> String {
    let mut out = format!("ncpoly v1 vars={} alphabet={}\n", poly.nvars, poly.alphabet);
    for (w, c) in poly.terms() {
        if w.is_empty() {
            writeln!(out, "{c}").unwrap();
        } else {
            writeln!(out, "{c} {w}").unwrap();
        }
    }
    out
}
