use std::fmt::Debug;

use num_bigint::BigInt;

/// A commutative ring whose elements are plain values and whose operations
/// need a context (the modulus of a prime field, for instance).
///
/// Matrices and polynomials are generic over this trait so that the same
/// evaluation code runs over random field values and over exact symbolic
/// polynomials.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Image of an integer under the canonical map Z -> R.
    fn from_integer(&self, c: &BigInt) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}
