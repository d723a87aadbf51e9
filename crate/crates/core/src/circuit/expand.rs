use num_bigint::BigInt;
use num_traits::One;

use crate::ncpoly::{Alphabet, SparseNCPoly, Word};

use super::{Circuit, CircuitError, Gate};

pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// Expands the circuit into an explicit polynomial, gate by gate.
///
/// Fails with `CapExceeded` as soon as any gate's polynomial (or the raw
/// product before cancellation) has more than `term_cap` terms.
pub fn expand_to_sparse(c: &Circuit, term_cap: usize) -> Result<SparseNCPoly, CircuitError> {
    let n = c.nvars();
    let mut values: Vec<Option<SparseNCPoly>> = vec![None; c.size()];
    let last_use = c.last_uses();
    for (i, gate) in c.gates().iter().enumerate() {
        let poly = match gate {
            Gate::Var(v) => SparseNCPoly::normalize(Alphabet::Z, n, [(BigInt::one(), Word::z([*v]))])
                .expect("parsed circuits only reference declared variables"),
            Gate::Const(k) => SparseNCPoly::constant(Alphabet::Z, n, k.clone()),
            Gate::Add(a, b) => {
                let (a, b) = (values[*a].as_ref().unwrap(), values[*b].as_ref().unwrap());
                a.add(b)
            }
            Gate::Mul(a, b) => {
                let (a, b) = (values[*a].as_ref().unwrap(), values[*b].as_ref().unwrap());
                if a.sparsity().saturating_mul(b.sparsity()) > term_cap {
                    return Err(CircuitError::CapExceeded { gate: i, cap: term_cap });
                }
                a.mul(b)
            }
        };
        if poly.sparsity() > term_cap {
            return Err(CircuitError::CapExceeded { gate: i, cap: term_cap });
        }
        values[i] = Some(poly);
        if let Some((a, b)) = gate.operands() {
            for operand in [a, b] {
                if last_use[operand] == i && operand != c.output() {
                    values[operand] = None;
                }
            }
        }
    }
    Ok(values[c.output()].take().unwrap())
}
