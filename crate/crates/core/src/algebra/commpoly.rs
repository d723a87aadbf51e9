//! Exact commutative multivariate polynomials with integer coefficients.
//!
//! Variables are opaque ids, but every id has a printable name in the
//! block/index family scheme used by the substitution automaton: id `3(j-1)`
//! is the block variable `xi<j>`, ids `3(j-1)+1` and `3(j-1)+2` are the
//! index variables `y0_<j>` and `y1_<j>`. The scheme does not depend on the
//! automaton size, so ids never collide across families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::Ring;
use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub u32);

impl Var {
    /// Block variable ξ_j, `j >= 1`.
    pub fn xi(j: u32) -> Var {
        assert!(j >= 1, "block variables are 1-indexed");
        Var(3 * (j - 1))
    }

    /// Index variable y_{b,j}, `b` in {0, 1}, `j >= 1`.
    pub fn y(b: u32, j: u32) -> Var {
        assert!(b <= 1 && j >= 1);
        Var(3 * (j - 1) + 1 + b)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = self.0 / 3 + 1;
        match self.0 % 3 {
            0 => write!(f, "xi{j}"),
            r => write!(f, "y{}_{j}", r - 1),
        }
    }
}

impl FromStr for Var {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Var, AlgebraError> {
        let bad = || AlgebraError::Parse(format!("unknown variable `{s}`"));
        let index = |t: &str| t.parse::<u32>().ok().filter(|&j| j >= 1).ok_or_else(bad);
        if let Some(rest) = s.strip_prefix("xi") {
            return Ok(Var::xi(index(rest)?));
        }
        if let Some(rest) = s.strip_prefix('y') {
            let (b, j) = rest.split_once('_').ok_or_else(bad)?;
            let b = match b {
                "0" => 0,
                "1" => 1,
                _ => return Err(bad()),
            };
            return Ok(Var::y(b, index(j)?));
        }
        Err(bad())
    }
}

/// A monomial: variables with positive exponents. Empty map = 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommMonomial(BTreeMap<Var, u32>);

impl CommMonomial {
    pub fn one() -> Self {
        CommMonomial(BTreeMap::new())
    }

    pub fn var(v: Var) -> Self {
        Self::from_powers([(v, 1)])
    }

    /// Builds a monomial, merging repeated variables and dropping zero powers.
    pub fn from_powers<I: IntoIterator<Item = (Var, u32)>>(powers: I) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in powers {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        CommMonomial(map)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.values().map(|&e| u64::from(e)).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn powers(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &CommMonomial) -> CommMonomial {
        let mut map = self.0.clone();
        for (&v, &e) in &other.0 {
            *map.entry(v).or_insert(0) += e;
        }
        CommMonomial(map)
    }
}

impl fmt::Display for CommMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Integer-coefficient polynomial in canonical form: no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CommPoly {
    terms: BTreeMap<CommMonomial, BigInt>,
}

impl CommPoly {
    pub fn zero() -> Self {
        CommPoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(c, CommMonomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigInt::one(), CommMonomial::var(v))
    }

    pub fn term(c: BigInt, m: CommMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        CommPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (BigInt, CommMonomial)>>(terms: I) -> Self {
        let mut p = CommPoly::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    fn add_term(&mut self, c: BigInt, m: CommMonomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &CommMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CommMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(CommMonomial::degree).max()
    }

    pub fn add(&self, other: &CommPoly) -> CommPoly {
        let (mut acc, rest) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &rest.terms {
            acc.add_term(c.clone(), m.clone());
        }
        acc
    }

    pub fn neg(&self) -> CommPoly {
        CommPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        let mut acc = CommPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.add_term(ca * cb, ma.mul(mb));
            }
        }
        acc
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c} * {m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CommPoly {
    type Err = AlgebraError;

    /// Parses the printed form: terms `c * v^e v ...` or `c`, joined by `+`.
    fn from_str(s: &str) -> Result<CommPoly, AlgebraError> {
        let s = s.trim();
        if s == "0" {
            return Ok(CommPoly::zero());
        }
        let mut poly = CommPoly::zero();
        for raw in s.split(" + ") {
            let raw = raw.trim();
            let (coeff, mono) = match raw.split_once('*') {
                Some((c, m)) => (c.trim(), m.trim()),
                None => (raw, ""),
            };
            let c: BigInt = coeff
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("bad coefficient in `{raw}`")))?;
            let mut powers = Vec::new();
            for factor in mono.split_whitespace() {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e = e
                            .parse::<u32>()
                            .map_err(|_| AlgebraError::Parse(format!("bad exponent in `{factor}`")))?;
                        (n, e)
                    }
                    None => (factor, 1),
                };
                powers.push((name.parse::<Var>()?, exp));
            }
            poly.add_term(c, CommMonomial::from_powers(powers));
        }
        Ok(poly)
    }
}

/// The ring of [`CommPoly`] values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CommPolyRing;

impl Ring for CommPolyRing {
    type Elem = CommPoly;

    fn zero(&self) -> CommPoly {
        CommPoly::zero()
    }

    fn one(&self) -> CommPoly {
        CommPoly::constant(BigInt::one())
    }

    fn add(&self, a: &CommPoly, b: &CommPoly) -> CommPoly {
        a.add(b)
    }

    fn neg(&self, a: &CommPoly) -> CommPoly {
        a.neg()
    }

    fn mul(&self, a: &CommPoly, b: &CommPoly) -> CommPoly {
        a.mul(b)
    }

    fn is_zero(&self, a: &CommPoly) -> bool {
        a.is_zero()
    }

    fn from_integer(&self, c: &BigInt) -> CommPoly {
        CommPoly::constant(c.clone())
    }
}
