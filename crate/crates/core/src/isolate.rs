//! Isolating index sets for sets of equal-length bivariate words.
//!
//! A set of positions `I` isolates a word `m` of `M` when every other word of
//! `M` differs from `m` somewhere in `I`. [`isolating_index_set`] finds one of
//! size at most `ceil(log2 |M|)` by repeated halving.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::ncpoly::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsolateError {
    #[error("cannot isolate within an empty set")]
    EmptySet,
    #[error("words have different lengths ({0} and {1})")]
    MixedLengths(usize, usize),
    #[error("isolation needs bivariate words, found `{0}`")]
    NotBivariate(Word),
}

/// Strictly increasing 1-indexed positions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        positions.dedup();
        assert!(positions.first().map_or(true, |&p| p >= 1), "positions are 1-indexed");
        IndexSet(positions)
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.binary_search(&p).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolationStep {
    pub position: usize,
    /// The bit of the kept half at `position`.
    pub kept_bit: u32,
    /// Size of the surviving set after this step.
    pub surviving: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolationResult {
    pub index_set: IndexSet,
    pub isolated: Word,
    pub trace: Vec<IsolationStep>,
}

/// `ceil(log2 n)` with `ceil_log2(1) = 0`.
pub fn ceil_log2(n: u64) -> u32 {
    assert!(n >= 1);
    64 - (n - 1).leading_zeros()
}

fn validate<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Result<(Vec<&'a Word>, usize), IsolateError> {
    let set: BTreeSet<&Word> = words.into_iter().collect();
    let first = *set.iter().next().ok_or(IsolateError::EmptySet)?;
    for w in &set {
        if w.alphabet() != Alphabet::X {
            return Err(IsolateError::NotBivariate((*w).clone()));
        }
        if w.len() != first.len() {
            return Err(IsolateError::MixedLengths(first.len(), w.len()));
        }
    }
    Ok((set.into_iter().collect(), first.len()))
}

/// Halving: find the first position where the surviving words disagree,
/// keep the smaller side (the `x0` side on ties), repeat until one word
/// remains.
pub fn isolating_index_set<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Result<IsolationResult, IsolateError> {
    let (mut surviving, degree) = validate(words)?;
    let mut positions = Vec::new();
    let mut trace = Vec::new();
    while surviving.len() > 1 {
        let pos = (1..=degree)
            .find(|&i| {
                let b = surviving[0].at(i);
                surviving.iter().any(|w| w.at(i) != b)
            })
            .expect("distinct equal-length words disagree somewhere");
        let (zeros, ones): (Vec<&Word>, Vec<&Word>) = surviving.iter().partition(|w| w.at(pos) == 0);
        let (kept, bit) = if zeros.len() <= ones.len() { (zeros, 0) } else { (ones, 1) };
        surviving = kept;
        positions.push(pos);
        trace.push(IsolationStep {
            position: pos,
            kept_bit: bit,
            surviving: surviving.len(),
        });
    }
    Ok(IsolationResult {
        index_set: IndexSet::new(positions),
        isolated: surviving[0].clone(),
        trace,
    })
}

/// Brute force: does every other word of `words` differ from `m` at some
/// position of `index_set`?
pub fn check_isolating<'a, I: IntoIterator<Item = &'a Word>>(words: I, index_set: &IndexSet, m: &Word) -> bool {
    words.into_iter().filter(|w| *w != m).all(|w| {
        index_set
            .positions()
            .iter()
            .any(|&i| i <= w.len() && i <= m.len() && w.at(i) != m.at(i))
    })
}
