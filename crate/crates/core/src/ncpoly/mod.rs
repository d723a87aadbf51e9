//! Explicit sparse noncommutative polynomials.
//!
//! Words are stored symbol by symbol, so this representation is only meant
//! for polynomials of modest degree: it is the ground truth that the
//! black-box tester is validated against.

mod text;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Matrix, PrimeField, Ring};

pub use text::{parse_ncpoly, write_ncpoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcPolyError {
    #[error("symbol {symbol} is outside the {alphabet} alphabet with {nvars} variables")]
    SymbolOutOfRange {
        symbol: u32,
        alphabet: Alphabet,
        nvars: u32,
    },
    #[error("word over the {found} alphabet used in a polynomial over {expected}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("expected {expected} matrices, got {found}")]
    AssignmentArity { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Which alphabet a word is written over.
///
/// `Z` words use symbols `1..=n` for `z1..zn`; `X` words use `0` and `1` for
/// `x0` and `x1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    Z,
    X,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::Z => "z",
            Alphabet::X => "x",
        })
    }
}

/// A monomial of the free algebra: a finite sequence of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<u32>,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<u32>) -> Self {
        Word { alphabet, symbols }
    }

    /// Word over `z1..zn` from 1-based variable indices.
    pub fn z(symbols: impl Into<Vec<u32>>) -> Self {
        Word::new(Alphabet::Z, symbols.into())
    }

    /// Word over `{x0, x1}` from bits.
    pub fn x(bits: impl Into<Vec<u32>>) -> Self {
        let symbols = bits.into();
        debug_assert!(symbols.iter().all(|&b| b <= 1));
        Word::new(Alphabet::X, symbols)
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word::new(alphabet, Vec::new())
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> u32 {
        assert!(i >= 1 && i <= self.symbols.len(), "position {i} out of range");
        self.symbols[i - 1]
    }

    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.alphabet, other.alphabet);
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word::new(self.alphabet, symbols)
    }

    /// Image under `z_i -> x0 x1^i x0`. Bivariate words are returned as is.
    pub fn encode_bivariate(&self) -> Word {
        match self.alphabet {
            Alphabet::X => self.clone(),
            Alphabet::Z => {
                let len = self.symbols.iter().map(|&i| i as usize + 2).sum();
                let mut out = Vec::with_capacity(len);
                for &i in &self.symbols {
                    out.push(0);
                    out.extend(std::iter::repeat(1).take(i as usize));
                    out.push(0);
                }
                Word::x(out)
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{s}", self.alphabet)?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Sparse polynomial `sum c_i w_i` with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseNCPoly {
    alphabet: Alphabet,
    nvars: u32,
    terms: BTreeMap<Word, BigInt>,
}

/// The top-degree words of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxDegreeSet {
    pub degree: usize,
    pub words: BTreeSet<Word>,
}

impl SparseNCPoly {
    pub fn zero(alphabet: Alphabet, nvars: u32) -> Self {
        let nvars = if alphabet == Alphabet::X { 2 } else { nvars };
        SparseNCPoly {
            alphabet,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// Combines duplicate words and drops zero coefficients.
    pub fn normalize<I>(alphabet: Alphabet, nvars: u32, raw: I) -> Result<Self, NcPolyError>
    where
        I: IntoIterator<Item = (BigInt, Word)>,
    {
        let mut poly = Self::zero(alphabet, nvars);
        for (c, w) in raw {
            poly.check_word(&w)?;
            poly.add_term(c, w);
        }
        Ok(poly)
    }

    fn check_word(&self, w: &Word) -> Result<(), NcPolyError> {
        if w.alphabet != self.alphabet {
            return Err(NcPolyError::AlphabetMismatch {
                expected: self.alphabet,
                found: w.alphabet,
            });
        }
        let in_range = |s: u32| match self.alphabet {
            Alphabet::Z => s >= 1 && s <= self.nvars,
            Alphabet::X => s <= 1,
        };
        if let Some(&symbol) = w.symbols.iter().find(|&&s| !in_range(s)) {
            return Err(NcPolyError::SymbolOutOfRange {
                symbol,
                alphabet: self.alphabet,
                nvars: self.nvars,
            });
        }
        Ok(())
    }

    fn add_term(&mut self, c: BigInt, w: Word) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    /// The constant polynomial `c`.
    pub fn constant(alphabet: Alphabet, nvars: u32, c: BigInt) -> Self {
        let mut p = Self::zero(alphabet, nvars);
        p.add_term(c, Word::empty(alphabet));
        p
    }

    /// The single variable `z_i` (or `x_i`).
    pub fn variable(alphabet: Alphabet, nvars: u32, i: u32) -> Result<Self, NcPolyError> {
        Self::normalize(alphabet, nvars, [(BigInt::one(), Word::new(alphabet, vec![i]))])
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero monomials.
    pub fn sparsity(&self) -> usize {
        self.terms.len()
    }

    /// Maximum word length, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn add(&self, other: &SparseNCPoly) -> SparseNCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    pub fn neg(&self) -> SparseNCPoly {
        SparseNCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &SparseNCPoly) -> SparseNCPoly {
        self.add(&other.neg())
    }

    /// Noncommutative product: words concatenate, `self` on the left.
    pub fn mul(&self, other: &SparseNCPoly) -> SparseNCPoly {
        let mut out = Self::zero(self.alphabet, self.nvars.max(other.nvars));
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(ca * cb, wa.concat(wb));
            }
        }
        out
    }

    /// Coefficients reduced into `field`; terms that vanish there are dropped.
    pub fn reduce_mod(&self, field: &PrimeField) -> SparseNCPoly {
        let modulus = BigInt::from(field.modulus().clone());
        let mut out = Self::zero(self.alphabet, self.nvars);
        for (w, c) in &self.terms {
            let r = ((c % &modulus) + &modulus) % &modulus;
            out.add_term(r, w.clone());
        }
        out
    }

    /// Applies `z_i -> x0 x1^i x0` to every word; coefficients unchanged.
    pub fn encode_bivariate(&self) -> SparseNCPoly {
        let mut out = Self::zero(Alphabet::X, 2);
        for (w, c) in &self.terms {
            out.add_term(c.clone(), w.encode_bivariate());
        }
        out
    }

    /// Degree `D` and the words of length `D`.
    pub fn max_degree_set(&self) -> Result<MaxDegreeSet, NcPolyError> {
        let degree = self.degree().ok_or(NcPolyError::ZeroPolynomial)?;
        let words = self.terms.keys().filter(|w| w.len() == degree).cloned().collect();
        Ok(MaxDegreeSet { degree, words })
    }

    /// Evaluates at matrices: `assignment[i-1]` for `z_i`, or
    /// `assignment[b]` for `x_b`. Products follow the left-to-right order of
    /// each word; scalars act as multiples of the identity.
    pub fn eval<R: Ring>(
        &self,
        ring: &R,
        assignment: &[Matrix<R::Elem>],
        dim: usize,
    ) -> Result<Matrix<R::Elem>, NcPolyError> {
        if assignment.len() != self.nvars as usize {
            return Err(NcPolyError::AssignmentArity {
                expected: self.nvars as usize,
                found: assignment.len(),
            });
        }
        for m in assignment {
            if m.dim() != dim {
                return Err(AlgebraError::DimMismatch {
                    left: dim,
                    right: m.dim(),
                }
                .into());
            }
        }
        let index = |s: u32| match self.alphabet {
            Alphabet::Z => s as usize - 1,
            Alphabet::X => s as usize,
        };
        let mut acc = Matrix::zero(ring, dim);
        for (w, c) in &self.terms {
            let mut prod = Matrix::scalar(ring, dim, ring.from_integer(c));
            for &s in w.symbols() {
                prod = prod.mul(ring, &assignment[index(s)])?;
            }
            acc = acc.add(ring, &prod)?;
        }
        Ok(acc)
    }
}

/// True iff the bivariate encodings of `words` are pairwise distinct.
pub fn encoding_injective_check<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> bool {
    let mut seen_src = BTreeSet::new();
    let mut seen_enc = BTreeSet::new();
    for w in words {
        if seen_src.insert(w.clone()) && !seen_enc.insert(w.encode_bivariate()) {
            return false;
        }
    }
    true
}
