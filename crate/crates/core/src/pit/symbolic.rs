use std::fmt::Display;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::algebra::{CommMonomial, CommPoly, CommPolyRing, Var};
use crate::autmat::symbolic_matrices;
use crate::isolate::{isolating_index_set, IndexSet};
use crate::ncpoly::{Alphabet, SparseNCPoly, Word};

use super::PitError;

fn as_string<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// The commutative monomial the automaton emits on `word` when it advances
/// exactly at the positions `j_1 < ... < j_K` of `index_set`:
///
/// `xi_1^(j_1 - 1) xi_2^(j_2 - j_1 - 1) ... xi_{K+1}^(D - j_K)
///  * y_{w_{j_1},1} ... y_{w_{j_K},K}`
///
/// The `xi` exponents count the positions strictly between consecutive
/// advances, so the total degree is `D`.
pub fn block_index_monomial(word: &Word, index_set: &IndexSet) -> CommMonomial {
    let positions = index_set.positions();
    let mut powers = Vec::with_capacity(2 * positions.len() + 1);
    let mut prev = 0usize;
    for (i, &j) in positions.iter().enumerate() {
        let step = i as u32 + 1;
        powers.push((Var::xi(step), (j - prev - 1) as u32));
        powers.push((Var::y(word.at(j), step), 1));
        prev = j;
    }
    powers.push((Var::xi(positions.len() as u32 + 1), (word.len() - prev) as u32));
    CommMonomial::from_powers(powers.into_iter().filter(|&(_, e)| e > 0))
}

/// Outcome of evaluating a polynomial at the symbolic automaton matrices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymbolicReport {
    /// Automaton size `K = |I|`.
    pub k_used: usize,
    /// Degree of the encoded polynomial.
    pub degree: usize,
    /// Entry `(0, K)` of the evaluation.
    #[serde(serialize_with = "as_string")]
    pub entry_poly: CommPoly,
    pub isolated_word: Word,
    pub index_set: IndexSet,
    #[serde(serialize_with = "as_string")]
    pub isolated_monomial: CommMonomial,
    #[serde(serialize_with = "as_string")]
    pub entry_coefficient: BigInt,
    #[serde(serialize_with = "as_string")]
    pub expected_coefficient: BigInt,
    pub entry_nonzero: bool,
    pub coefficient_matches: bool,
}

impl SymbolicReport {
    pub fn passed(&self) -> bool {
        self.entry_nonzero && self.coefficient_matches
    }
}

/// Encodes `f` (if it is over `z`), isolates a top-degree word `m` with index
/// set `I`, evaluates at the symbolic matrices of size `K = |I|` and checks
/// that entry `(0, K)` is nonzero with the coefficient of `m` on
/// [`block_index_monomial`]`(m, I)`.
pub fn symbolic_theorem_check(f: &SparseNCPoly) -> Result<SymbolicReport, PitError> {
    let encoded = match f.alphabet() {
        Alphabet::Z => f.encode_bivariate(),
        Alphabet::X => f.clone(),
    };
    let top = encoded.max_degree_set()?;
    let iso = isolating_index_set(&top.words)?;
    let k = iso.index_set.len();
    let sm = symbolic_matrices(k);
    let value = encoded.eval(&CommPolyRing, &[sm.mx0, sm.mx1], k + 1)?;
    let entry_poly = value.get(0, k).clone();
    let isolated_monomial = block_index_monomial(&iso.isolated, &iso.index_set);
    let entry_coefficient = entry_poly.coeff(&isolated_monomial);
    let expected_coefficient = encoded.coeff(&iso.isolated);
    Ok(SymbolicReport {
        k_used: k,
        degree: top.degree,
        entry_nonzero: !entry_poly.is_zero(),
        coefficient_matches: entry_coefficient == expected_coefficient,
        entry_poly,
        isolated_word: iso.isolated,
        index_set: iso.index_set,
        isolated_monomial,
        entry_coefficient,
        expected_coefficient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_exponents() {
        let w = Word::x(vec![0, 1, 1, 0, 1]);
        let m = block_index_monomial(&w, &IndexSet::new(vec![2, 4]));
        let want = CommMonomial::from_powers([
            (Var::xi(1), 1),
            (Var::y(1, 1), 1),
            (Var::xi(2), 1),
            (Var::y(0, 2), 1),
            (Var::xi(3), 1),
        ]);
        assert_eq!(m, want);
        assert_eq!(m.degree(), 5);
        let empty = block_index_monomial(&w, &IndexSet::new(vec![]));
        assert_eq!(empty, CommMonomial::from_powers([(Var::xi(1), 5)]));
        let ends = block_index_monomial(&w, &IndexSet::new(vec![1, 5]));
        assert_eq!(
            ends,
            CommMonomial::from_powers([(Var::y(0, 1), 1), (Var::xi(2), 3), (Var::y(1, 2), 1)])
        );
    }

    #[test]
    fn commutator() {
        let p = SparseNCPoly::normalize(
            Alphabet::Z,
            2,
            [(BigInt::from(1), Word::z(vec![1, 2])), (BigInt::from(-1), Word::z(vec![2, 1]))],
        )
        .unwrap();
        let r = symbolic_theorem_check(&p).unwrap();
        assert!(r.passed());
        assert_eq!(r.k_used, 1);
        assert_eq!(r.degree, 7);
    }

    #[test]
    fn constant_uses_k0() {
        let p = SparseNCPoly::constant(Alphabet::Z, 1, BigInt::from(5));
        let r = symbolic_theorem_check(&p).unwrap();
        assert!(r.passed());
        assert_eq!(r.k_used, 0);
        assert_eq!(r.entry_poly, CommPoly::constant(BigInt::from(5)));
    }

    #[test]
    fn zero_is_rejected() {
        let p = SparseNCPoly::zero(Alphabet::Z, 2);
        assert!(symbolic_theorem_check(&p).is_err());
    }
}
