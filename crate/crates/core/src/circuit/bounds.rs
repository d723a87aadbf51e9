use std::fmt;

use serde::{Serialize, Serializer};

use super::{Circuit, Gate};

const SATURATION: u64 = 1 << 63;

/// A nonnegative integer that saturates to `Huge` past 2^63.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    Finite(u64),
    Huge,
}

impl Bound {
    pub fn new(v: u64) -> Bound {
        if v > SATURATION {
            Bound::Huge
        } else {
            Bound::Finite(v)
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Bound::Finite(v) => Some(v),
            Bound::Huge => None,
        }
    }

    pub fn is_huge(self) -> bool {
        self == Bound::Huge
    }

    pub fn saturating_add(self, other: Bound) -> Bound {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a.checked_add(b).map_or(Bound::Huge, Bound::new),
            _ => Bound::Huge,
        }
    }

    pub fn saturating_mul(self, other: Bound) -> Bound {
        match (self, other) {
            (Bound::Finite(0), _) | (_, Bound::Finite(0)) => Bound::Finite(0),
            (Bound::Finite(a), Bound::Finite(b)) => a.checked_mul(b).map_or(Bound::Huge, Bound::new),
            _ => Bound::Huge,
        }
    }
}

/// A number, or the string `"huge"`.
impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Bound::Finite(v) => s.serialize_u64(*v),
            Bound::Huge => s.serialize_str("huge"),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Huge => f.write_str("huge"),
        }
    }
}

impl Circuit {
    fn fold_bound(&self, leaf: impl Fn(&Gate) -> Bound, plus: impl Fn(Bound, Bound) -> Bound, times: impl Fn(Bound, Bound) -> Bound) -> Bound {
        let mut vals: Vec<Bound> = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            let v = match *g {
                Gate::Add(a, b) => plus(vals[a], vals[b]),
                Gate::Mul(a, b) => times(vals[a], vals[b]),
                _ => leaf(g),
            };
            vals.push(v);
        }
        vals[self.output]
    }

    /// Syntactic degree: 1 for variables, 0 for constants, max over plus,
    /// sum over times.
    pub fn syntactic_degree_bound(&self) -> Bound {
        self.fold_bound(
            |g| Bound::Finite(u64::from(matches!(g, Gate::Var(_)))),
            |a, b| a.max(b),
            Bound::saturating_add,
        )
    }

    /// Upper bound on log2 of the number of monomials: 0 at leaves,
    /// `ceil(log2(2^a + 2^b)) = max(a, b) + 1` over plus, `a + b` over times.
    pub fn sparsity_log2_bound(&self) -> Bound {
        self.fold_bound(
            |_| Bound::Finite(0),
            |a, b| a.max(b).saturating_add(Bound::Finite(1)),
            Bound::saturating_add,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{gen, CircuitBuilder};

    #[test]
    fn single_var() {
        let mut b = CircuitBuilder::new(1);
        let v = b.var(1);
        let c = b.finish(v);
        assert_eq!(c.syntactic_degree_bound(), Bound::Finite(1));
        assert_eq!(c.sparsity_log2_bound(), Bound::Finite(0));
    }

    #[test]
    fn repeated_squaring() {
        for s in [0u32, 1, 5, 40, 62, 63] {
            let c = gen::power_sum(1, s);
            assert_eq!(c.syntactic_degree_bound(), Bound::Finite(1 << s), "s = {s}");
        }
        assert_eq!(gen::power_sum(1, 64).syntactic_degree_bound(), Bound::Huge);
        assert_eq!(gen::power_sum(1, 70).syntactic_degree_bound(), Bound::Huge);
    }

    #[test]
    fn binomial_power_sparsity() {
        for s in [0u32, 1, 3, 10] {
            let c = gen::binomial_power(s);
            assert_eq!(c.sparsity_log2_bound(), Bound::Finite(1 << s));
            assert_eq!(c.syntactic_degree_bound(), Bound::Finite(1 << s));
        }
        assert_eq!(gen::binomial_power(80).sparsity_log2_bound(), Bound::Huge);
    }

    #[test]
    fn plus_takes_max_and_product_of_sums() {
        let mut b = CircuitBuilder::new(2);
        let z1 = b.var(1);
        let z2 = b.var(2);
        let sq = b.mul(z1, z1);
        let cube = b.mul(sq, z2);
        let quad = b.mul(sq, sq);
        let five = b.mul(quad, z1);
        let out = b.add(cube, five);
        assert_eq!(b.clone().finish(out).syntactic_degree_bound(), Bound::Finite(5));

        let s1 = b.add(z1, z2);
        let s2 = b.add(z2, z1);
        let prod = b.mul(s1, s2);
        assert_eq!(b.finish(prod).sparsity_log2_bound(), Bound::Finite(2));
    }

    #[test]
    fn saturating_arithmetic() {
        assert_eq!(Bound::Finite(1 << 63).saturating_add(Bound::Finite(1)), Bound::Huge);
        assert_eq!(Bound::Finite(1 << 62).saturating_add(Bound::Finite(1 << 62)), Bound::Finite(1 << 63));
        assert_eq!(Bound::Huge.saturating_mul(Bound::Finite(0)), Bound::Finite(0));
        assert_eq!(Bound::Finite(1 << 40).saturating_mul(Bound::Finite(1 << 30)), Bound::Huge);
        assert_eq!(Bound::new(u64::MAX), Bound::Huge);
    }
}
