use std::fmt;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Serialize, Serializer};

use super::primality::is_prime;
use super::ring::Ring;
use super::AlgebraError;

/// Moduli below this use native `u64`/`u128` arithmetic.
const FAST_PATH_LIMIT: u64 = 1 << 63;

/// The prime field Z/pZ for an arbitrary-precision prime p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    modulus: BigUint,
    small: Option<u64>,
}

/// A canonical representative in `[0, p)`.
///
/// Elements carry no reference to their field; every operation goes through
/// the owning [`PrimeField`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Small(u64),
    Big(BigUint),
}

impl FieldElem {
    pub fn to_biguint(&self) -> BigUint {
        match &self.0 {
            Repr::Small(v) => BigUint::from(*v),
            Repr::Big(v) => v.clone(),
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small(v) => Some(*v),
            Repr::Big(v) => v.to_u64(),
        }
    }

    fn bytes(&self) -> Vec<u8> {
        self.to_biguint().to_bytes_le()
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => write!(f, "{v}"),
            Repr::Big(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl PrimeField {
    /// Creates the field, rejecting moduli that fail the primality test.
    pub fn new(modulus: BigUint) -> Result<Self, AlgebraError> {
        if modulus < BigUint::from(2u32) || !is_prime(&modulus) {
            return Err(AlgebraError::NotPrime(modulus));
        }
        let small = modulus.to_u64().filter(|&m| m < FAST_PATH_LIMIT);
        Ok(PrimeField { modulus, small })
    }

    pub fn from_u64(modulus: u64) -> Result<Self, AlgebraError> {
        Self::new(BigUint::from(modulus))
    }

    /// The Mersenne prime 2^61 - 1.
    pub fn mersenne61() -> Self {
        Self::from_u64((1 << 61) - 1).expect("2^61 - 1 is prime")
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn bits(&self) -> u64 {
        self.modulus.bits()
    }

    /// log2 of the field size, as a float.
    pub fn log2_size(&self) -> f64 {
        let bits = self.modulus.bits();
        if bits <= 64 {
            return (self.modulus.to_u64().unwrap() as f64).log2();
        }
        // Keep the top 64 bits for the mantissa.
        let shift = bits - 64;
        let top = (&self.modulus >> shift).to_u64().unwrap() as f64;
        top.log2() + shift as f64
    }

    pub fn elem(&self, value: &BigUint) -> FieldElem {
        match self.small {
            Some(m) => FieldElem(Repr::Small((value % m).to_u64().unwrap())),
            None => FieldElem(Repr::Big(value % &self.modulus)),
        }
    }

    pub fn elem_u64(&self, value: u64) -> FieldElem {
        match self.small {
            Some(m) => FieldElem(Repr::Small(value % m)),
            None => FieldElem(Repr::Big(BigUint::from(value) % &self.modulus)),
        }
    }

    /// Uniform sample from the field, or from its nonzero elements.
    pub fn sample<G: Rng + ?Sized>(&self, rng: &mut G, nonzero: bool) -> FieldElem {
        let low = u64::from(nonzero);
        match self.small {
            Some(m) => FieldElem(Repr::Small(rng.gen_range(low..m))),
            None => {
                let low = BigUint::from(low);
                FieldElem(Repr::Big(rng.gen_biguint_range(&low, &self.modulus)))
            }
        }
    }

    pub fn pow(&self, base: &FieldElem, exp: &BigUint) -> FieldElem {
        match (&base.0, self.small) {
            (Repr::Small(b), Some(m)) => {
                let r = BigUint::from(*b).modpow(exp, &BigUint::from(m));
                FieldElem(Repr::Small(r.to_u64().unwrap()))
            }
            _ => FieldElem(Repr::Big(base.to_biguint().modpow(exp, &self.modulus))),
        }
    }

    /// Multiplicative inverse by Fermat's little theorem; `None` for zero.
    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        if self.is_zero(a) {
            return None;
        }
        let exp = &self.modulus - 2u32;
        Some(self.pow(a, &exp))
    }

    pub(crate) fn digest_bytes(a: &FieldElem) -> Vec<u8> {
        a.bytes()
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.modulus)
    }
}

impl Ring for PrimeField {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        self.elem_u64(0)
    }

    fn one(&self) -> FieldElem {
        self.elem_u64(1)
    }

    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (&a.0, &b.0, self.small) {
            (Repr::Small(x), Repr::Small(y), Some(m)) => {
                // x, y < 2^63 so the sum cannot overflow.
                let s = x + y;
                FieldElem(Repr::Small(if s >= m { s - m } else { s }))
            }
            (Repr::Big(x), Repr::Big(y), None) => {
                let s = x + y;
                FieldElem(Repr::Big(if s >= self.modulus { s - &self.modulus } else { s }))
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    fn neg(&self, a: &FieldElem) -> FieldElem {
        match (&a.0, self.small) {
            (Repr::Small(0), Some(_)) => a.clone(),
            (Repr::Small(x), Some(m)) => FieldElem(Repr::Small(m - x)),
            (Repr::Big(x), None) if x.is_zero() => a.clone(),
            (Repr::Big(x), None) => FieldElem(Repr::Big(&self.modulus - x)),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (&a.0, &b.0, self.small) {
            (Repr::Small(x), Repr::Small(y), Some(m)) => {
                FieldElem(Repr::Small(((*x as u128 * *y as u128) % m as u128) as u64))
            }
            (Repr::Big(x), Repr::Big(y), None) => FieldElem(Repr::Big((x * y) % &self.modulus)),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    fn is_zero(&self, a: &FieldElem) -> bool {
        match &a.0 {
            Repr::Small(v) => *v == 0,
            Repr::Big(v) => v.is_zero(),
        }
    }

    fn from_integer(&self, c: &BigInt) -> FieldElem {
        let reduced = self.elem(c.magnitude());
        if c.sign() == Sign::Minus {
            self.neg(&reduced)
        } else {
            reduced
        }
    }
}

impl PrimeField {
    pub fn is_one(&self, a: &FieldElem) -> bool {
        match &a.0 {
            Repr::Small(v) => *v == 1,
            Repr::Big(v) => v.is_one(),
        }
    }
}
