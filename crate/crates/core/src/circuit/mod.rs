//! Noncommutative arithmetic circuits.
//!
//! Gates are stored in topological order: every operand index is smaller
//! than the index of the gate using it. Multiplication keeps its operand
//! order, `Mul(left, right)` computes `left * right`.

mod blackbox;
mod bounds;
mod expand;
pub mod gen;
mod text;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{AlgebraError, Matrix, Ring};

pub use blackbox::{BlackBox, BoxError, LimitedBox};
pub use bounds::Bound;
pub use expand::{expand_to_sparse, DEFAULT_TERM_CAP};
pub use text::{parse_circuit, write_circuit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: gate `{gate}` depends on itself")]
    Cycle { line: usize, gate: String },
    #[error("line {line}: {message}")]
    BadReference { line: usize, message: String },
    #[error("expansion of gate {gate} exceeds the cap of {cap} terms")]
    CapExceeded { gate: usize, cap: usize },
    #[error("expected {expected} input matrices, got {found}")]
    InputArity { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Generator(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gate {
    /// The variable `z_i`, 1-indexed.
    Var(u32),
    Const(BigInt),
    Add(usize, usize),
    Mul(usize, usize),
}

impl Gate {
    pub fn operands(&self) -> Option<(usize, usize)> {
        match *self {
            Gate::Add(a, b) | Gate::Mul(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    nvars: u32,
    gates: Vec<Gate>,
    /// Numeric part of each gate's `g<k>` label in the text format.
    labels: Vec<u64>,
    output: usize,
}

impl Circuit {
    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Number of gates.
    pub fn size(&self) -> usize {
        self.gates.len()
    }

    pub fn label(&self, gate: usize) -> u64 {
        self.labels[gate]
    }

    /// Evaluates every gate on `inputs` (one `dim x dim` matrix per
    /// variable) and returns the output gate's matrix. Constants act as
    /// scalar multiples of the identity.
    pub fn eval<R: Ring>(
        &self,
        ring: &R,
        inputs: &[Matrix<R::Elem>],
        dim: usize,
    ) -> Result<Matrix<R::Elem>, CircuitError> {
        if inputs.len() != self.nvars as usize {
            return Err(CircuitError::InputArity {
                expected: self.nvars as usize,
                found: inputs.len(),
            });
        }
        if let Some(m) = inputs.iter().find(|m| m.dim() != dim) {
            return Err(AlgebraError::DimMismatch {
                left: dim,
                right: m.dim(),
            }
            .into());
        }
        let mut values: Vec<Option<Matrix<R::Elem>>> = vec![None; self.gates.len()];
        let last_use = self.last_uses();
        for (i, gate) in self.gates.iter().enumerate() {
            let value = match gate {
                Gate::Var(v) => inputs[*v as usize - 1].clone(),
                Gate::Const(c) => Matrix::scalar(ring, dim, ring.from_integer(c)),
                Gate::Add(a, b) => {
                    let (a, b) = (values[*a].as_ref().unwrap(), values[*b].as_ref().unwrap());
                    a.add(ring, b)?
                }
                Gate::Mul(a, b) => {
                    let (a, b) = (values[*a].as_ref().unwrap(), values[*b].as_ref().unwrap());
                    a.mul(ring, b)?
                }
            };
            values[i] = Some(value);
            if let Some((a, b)) = gate.operands() {
                for operand in [a, b] {
                    if last_use[operand] == i && operand != self.output {
                        values[operand] = None;
                    }
                }
            }
        }
        Ok(values[self.output].take().unwrap())
    }

    /// Index of the last gate reading each gate's value.
    fn last_uses(&self) -> Vec<usize> {
        let mut last = vec![usize::MAX; self.gates.len()];
        for (i, gate) in self.gates.iter().enumerate() {
            if let Some((a, b)) = gate.operands() {
                last[a] = i;
                last[b] = i;
            }
        }
        last
    }
}

/// Incremental construction of a [`Circuit`]; every method returns the new
/// gate's index.
#[derive(Clone, Debug)]
pub struct CircuitBuilder {
    nvars: u32,
    gates: Vec<Gate>,
}

impl CircuitBuilder {
    pub fn new(nvars: u32) -> Self {
        CircuitBuilder {
            nvars,
            gates: Vec::new(),
        }
    }

    fn push(&mut self, gate: Gate) -> usize {
        if let Some((a, b)) = gate.operands() {
            assert!(a < self.gates.len() && b < self.gates.len(), "operand not yet defined");
        }
        self.gates.push(gate);
        self.gates.len() - 1
    }

    pub fn var(&mut self, i: u32) -> usize {
        assert!(i >= 1 && i <= self.nvars, "variable z{i} out of range");
        self.push(Gate::Var(i))
    }

    pub fn constant(&mut self, c: impl Into<BigInt>) -> usize {
        self.push(Gate::Const(c.into()))
    }

    pub fn add(&mut self, a: usize, b: usize) -> usize {
        self.push(Gate::Add(a, b))
    }

    pub fn mul(&mut self, left: usize, right: usize) -> usize {
        self.push(Gate::Mul(left, right))
    }

    /// `a - b`, as `a + (-1) * b`.
    pub fn sub(&mut self, a: usize, b: usize) -> usize {
        let minus_one = self.constant(-1);
        let neg = self.mul(minus_one, b);
        self.add(a, neg)
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn finish(self, output: usize) -> Circuit {
        assert!(output < self.gates.len(), "output gate not defined");
        let labels = (0..self.gates.len() as u64).collect();
        Circuit {
            nvars: self.nvars,
            gates: self.gates,
            labels,
            output,
        }
    }
}
