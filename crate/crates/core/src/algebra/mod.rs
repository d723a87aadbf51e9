//! Prime fields, exact commutative polynomials and square matrices over any
//! [`Ring`].

mod commpoly;
mod field;
mod matrix;
pub mod primality;
mod ring;

use num_bigint::BigUint;
use thiserror::Error;

pub use commpoly::{CommMonomial, CommPoly, CommPolyRing, Var};
pub use field::{FieldElem, PrimeField};
pub use matrix::Matrix;
pub use ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not prime")]
    NotPrime(BigUint),
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("matrix rows do not form a square array")]
    NotSquare,
    #[error("parse error: {0}")]
    Parse(String),
}
