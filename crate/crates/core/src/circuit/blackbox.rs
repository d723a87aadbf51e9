use thiserror::Error;

use crate::algebra::{FieldElem, Matrix, PrimeField};

use super::{Circuit, CircuitError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoxError {
    #[error("black box refuses dimension {dim} (supports up to {max})")]
    DimRefused { dim: usize, max: usize },
    #[error("black box refuses a {bits}-bit modulus (supports up to {max} bits)")]
    ModulusRefused { bits: u64, max: u64 },
    #[error("black box evaluation failed: {0}")]
    Evaluation(String),
}

/// An evaluation oracle for a polynomial in `z1..zn`: it accepts one square
/// matrix per variable and returns the value of the polynomial there,
/// revealing nothing else.
///
/// Implementations that cannot serve a request (dimension, modulus size)
/// report it through [`BoxError`] rather than returning a wrong value.
pub trait BlackBox: Sync {
    fn nvars(&self) -> usize;

    fn evaluate(&self, field: &PrimeField, inputs: &[Matrix<FieldElem>]) -> Result<Matrix<FieldElem>, BoxError>;
}

impl BlackBox for Circuit {
    fn nvars(&self) -> usize {
        self.nvars as usize
    }

    fn evaluate(&self, field: &PrimeField, inputs: &[Matrix<FieldElem>]) -> Result<Matrix<FieldElem>, BoxError> {
        let dim = inputs.first().map_or(1, Matrix::dim);
        self.eval(field, inputs, dim).map_err(|e: CircuitError| BoxError::Evaluation(e.to_string()))
    }
}

impl<B: BlackBox + ?Sized> BlackBox for &B {
    fn nvars(&self) -> usize {
        (**self).nvars()
    }

    fn evaluate(&self, field: &PrimeField, inputs: &[Matrix<FieldElem>]) -> Result<Matrix<FieldElem>, BoxError> {
        (**self).evaluate(field, inputs)
    }
}

/// Wraps a black box with capability limits, as an external oracle might
/// have.
pub struct LimitedBox<B> {
    pub inner: B,
    pub max_dim: usize,
    pub max_modulus_bits: u64,
}

impl<B: BlackBox> BlackBox for LimitedBox<B> {
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    fn evaluate(&self, field: &PrimeField, inputs: &[Matrix<FieldElem>]) -> Result<Matrix<FieldElem>, BoxError> {
        if let Some(dim) = inputs.first().map(Matrix::dim).filter(|&d| d > self.max_dim) {
            return Err(BoxError::DimRefused {
                dim,
                max: self.max_dim,
            });
        }
        if field.bits() > self.max_modulus_bits {
            return Err(BoxError::ModulusRefused {
                bits: field.bits(),
                max: self.max_modulus_bits,
            });
        }
        self.inner.evaluate(field, inputs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;
    use crate::circuit::CircuitBuilder;

    #[test]
    fn limited_box_refuses_out_of_range_requests() {
        let mut b = CircuitBuilder::new(1);
        let v = b.var(1);
        let c = b.finish(v);
        let limited = LimitedBox {
            inner: &c,
            max_dim: 2,
            max_modulus_bits: 62,
        };
        let f = PrimeField::mersenne61();
        let ok = limited.evaluate(&f, &[Matrix::identity(&f, 2)]).unwrap();
        assert_eq!(ok, Matrix::identity(&f, 2));
        assert_eq!(
            limited.evaluate(&f, &[Matrix::identity(&f, 3)]),
            Err(BoxError::DimRefused { dim: 3, max: 2 })
        );
        let big = PrimeField::new((num_bigint::BigUint::from(1u32) << 89) - 1u32).unwrap();
        assert!(matches!(
            limited.evaluate(&big, &[Matrix::identity(&big, 1)]),
            Err(BoxError::ModulusRefused { bits: 89, .. })
        ));
        assert!(f.is_zero(&f.zero()));
    }
}
