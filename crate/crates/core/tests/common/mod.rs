//! Reference implementations used as oracles by the integration tests. They
//! share no code with the library beyond its data types.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use ncpit::algebra::{CommMonomial, CommPoly, FieldElem, Matrix, PrimeField, Var};
use ncpit::ncpoly::{Alphabet, SparseNCPoly, Word};

/// Sum over all runs of the substitution automaton on `bits` that start in
/// state `from` and end in state `to` (states `0..=k`) of the monomial each
/// run emits. Staying in state `s` emits `xi_{s+1}`, advancing from `s` on
/// bit `b` emits `y_{b,s+1}`.
pub fn path_sum(bits: &[u32], from: usize, to: usize, k: usize) -> CommPoly {
    let mut acc: BTreeMap<BTreeMap<Var, u32>, BigInt> = BTreeMap::new();
    let mut current = BTreeMap::new();
    walk(bits, 0, from, to, k, &mut current, &mut acc);
    CommPoly::from_terms(
        acc.into_iter()
            .map(|(m, c)| (c, CommMonomial::from_powers(m.into_iter()))),
    )
}

fn walk(
    bits: &[u32],
    pos: usize,
    state: usize,
    to: usize,
    k: usize,
    current: &mut BTreeMap<Var, u32>,
    acc: &mut BTreeMap<BTreeMap<Var, u32>, BigInt>,
) {
    if state > to {
        return;
    }
    if pos == bits.len() {
        if state == to {
            *acc.entry(current.clone()).or_insert_with(BigInt::zero) += 1;
        }
        return;
    }
    let mut step = |var: Var, next: usize, current: &mut BTreeMap<Var, u32>| {
        *current.entry(var).or_insert(0) += 1;
        walk(bits, pos + 1, next, to, k, current, acc);
        let e = current.get_mut(&var).unwrap();
        *e -= 1;
        if *e == 0 {
            current.remove(&var);
        }
    };
    step(Var::xi(state as u32 + 1), state, current);
    if state < k {
        step(Var::y(bits[pos], state as u32 + 1), state + 1, current);
    }
}

/// Entry `(0, k)` of `f` evaluated at the symbolic automaton matrices, by
/// enumerating runs word by word. `f` must be over `x0, x1`.
pub fn path_sum_entry(f: &SparseNCPoly, k: usize) -> CommPoly {
    assert_eq!(f.alphabet(), Alphabet::X);
    let mut total = CommPoly::zero();
    for (w, c) in f.terms() {
        let p = path_sum(w.symbols(), 0, k, k);
        total = total.add(&CommPoly::constant(c.clone()).mul(&p));
    }
    total
}

/// Evaluates a commutative polynomial at an integer point.
pub fn comm_eval(p: &CommPoly, point: &BTreeMap<Var, BigInt>) -> BigInt {
    let mut total = BigInt::zero();
    for (m, c) in p.terms() {
        let mut term = c.clone();
        for (v, e) in m.powers() {
            let x = point.get(&v).cloned().unwrap_or_else(BigInt::zero);
            for _ in 0..e {
                term *= &x;
            }
        }
        total += term;
    }
    total
}

/// Plain `u64` matrices modulo a prime below 2^32.
pub type Naive = Vec<Vec<u64>>;

pub fn naive_identity(dim: usize, c: u64) -> Naive {
    (0..dim)
        .map(|r| (0..dim).map(|col| if r == col { c } else { 0 }).collect())
        .collect()
}

pub fn naive_mul(a: &Naive, b: &Naive, p: u64) -> Naive {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0u64;
            for (l, row) in b.iter().enumerate() {
                s = (s + a[i][l] * row[j]) % p;
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn naive_add(a: &Naive, b: &Naive, p: u64) -> Naive {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| (u + v) % p).collect())
        .collect()
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((c % &m) + &m) % &m;
    u64::try_from(r).unwrap()
}

/// `f` evaluated word by word: `mats[i - 1]` for `z_i`, `mats[b]` for `x_b`.
pub fn naive_poly_eval(f: &SparseNCPoly, mats: &[Naive], p: u64) -> Naive {
    assert!(p < 1 << 32);
    let dim = mats.first().map_or(1, Vec::len);
    let mut acc = naive_identity(dim, 0);
    for (w, c) in f.terms() {
        let mut prod = naive_identity(dim, reduce(c, p));
        for &s in w.symbols() {
            let idx = match w.alphabet() {
                Alphabet::Z => s as usize - 1,
                Alphabet::X => s as usize,
            };
            prod = naive_mul(&prod, &mats[idx], p);
        }
        acc = naive_add(&acc, &prod, p);
    }
    acc
}

pub fn random_naive<G: Rng>(rng: &mut G, dim: usize, p: u64) -> Naive {
    (0..dim).map(|_| (0..dim).map(|_| rng.gen_range(0..p)).collect()).collect()
}

pub fn to_field(field: &PrimeField, m: &Naive) -> Matrix<FieldElem> {
    Matrix::from_fn(m.len(), |r, c| field.elem_u64(m[r][c]))
}

pub fn from_field(m: &Matrix<FieldElem>) -> Naive {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| m.get(r, c).to_u64().unwrap()).collect())
        .collect()
}

/// A random polynomial over `z1..zn` with up to `terms` words of length
/// `1..=degree` and small nonzero integer coefficients.
pub fn random_zpoly<G: Rng>(rng: &mut G, nvars: u32, degree: usize, terms: usize) -> SparseNCPoly {
    loop {
        let raw: Vec<(BigInt, Word)> = (0..terms)
            .map(|_| {
                let len = rng.gen_range(1..=degree);
                let w = Word::z((0..len).map(|_| rng.gen_range(1..=nvars)).collect::<Vec<_>>());
                let mut c = rng.gen_range(1..=9i64);
                if rng.gen_bool(0.5) {
                    c = -c;
                }
                (BigInt::from(c), w)
            })
            .collect();
        let f = SparseNCPoly::normalize(Alphabet::Z, nvars, raw).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}
