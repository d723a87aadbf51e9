//! Instance generators: fixed families used in tests and benchmarks, random
//! sparse instances, and random circuits that compute zero.

use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint, RandBigInt};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::algebra::PrimeField;
use crate::ncpoly::{Alphabet, SparseNCPoly, Word};

use super::{expand_to_sparse, Circuit, CircuitBuilder, CircuitError, Gate};

/// `z1 z2 - z2 z1`.
pub fn commutator() -> Circuit {
    let mut b = CircuitBuilder::new(2);
    let z1 = b.var(1);
    let z2 = b.var(2);
    let p = b.mul(z1, z2);
    let q = b.mul(z2, z1);
    let out = b.sub(p, q);
    b.finish(out)
}

/// `z1^(2^s) + ... + zn^(2^s)` by repeated squaring, `n (s + 1) + n - 1` gates.
pub fn power_sum(nvars: u32, stages: u32) -> Circuit {
    assert!(nvars >= 1);
    let mut b = CircuitBuilder::new(nvars);
    let mut acc = None;
    for i in 1..=nvars {
        let mut g = b.var(i);
        for _ in 0..stages {
            g = b.mul(g, g);
        }
        acc = Some(match acc {
            None => g,
            Some(prev) => b.add(prev, g),
        });
    }
    b.finish(acc.unwrap())
}

/// `(z1 + z2)^(2^s)`: `s + 3` gates, `2^(2^s)` monomials.
pub fn binomial_power(stages: u32) -> Circuit {
    let mut b = CircuitBuilder::new(2);
    let z1 = b.var(1);
    let z2 = b.var(2);
    let mut g = b.add(z1, z2);
    for _ in 0..stages {
        g = b.mul(g, g);
    }
    b.finish(g)
}

/// `g - g` where `g` is the output of `c`, sharing the subcircuit.
pub fn difference_with_self(c: &Circuit) -> Circuit {
    let mut b = CircuitBuilder {
        nvars: c.nvars(),
        gates: c.gates().to_vec(),
    };
    let out = b.sub(c.output(), c.output());
    b.finish(out)
}

fn word_capacity(n: u32, degree: usize) -> u128 {
    let mut total: u128 = 0;
    let mut layer: u128 = 1;
    for _ in 1..=degree {
        layer = layer.saturating_mul(u128::from(n));
        total = total.saturating_add(layer);
    }
    total
}

/// A random polynomial with exactly `terms` distinct words of lengths
/// `1..=degree` and coefficients uniform over the nonzero elements of
/// `field`, plus a sum-of-products circuit computing it.
pub fn gen_random_instance(
    nvars: u32,
    degree: usize,
    terms: usize,
    seed: u64,
    field: &PrimeField,
) -> Result<(Circuit, SparseNCPoly), CircuitError> {
    if terms == 0 || nvars == 0 || degree == 0 {
        return Err(CircuitError::Generator("need at least one variable, degree and term".into()));
    }
    if word_capacity(nvars, degree) < terms as u128 {
        return Err(CircuitError::Generator(format!(
            "only {} distinct words of length 1..={degree} over {nvars} variables, {terms} requested",
            word_capacity(nvars, degree)
        )));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut words = BTreeSet::new();
    let mut ordered = Vec::with_capacity(terms);
    while ordered.len() < terms {
        let len = rng.gen_range(1..=degree);
        let w = Word::z((0..len).map(|_| rng.gen_range(1..=nvars)).collect::<Vec<_>>());
        if words.insert(w.clone()) {
            ordered.push(w);
        }
    }
    let one = BigUint::from(1u32);
    let raw: Vec<(BigInt, Word)> = ordered
        .into_iter()
        .map(|w| (BigInt::from(rng.gen_biguint_range(&one, field.modulus())), w))
        .collect();

    let mut b = CircuitBuilder::new(nvars);
    let vars: Vec<usize> = (1..=nvars).map(|i| b.var(i)).collect();
    let mut sum = None;
    for (c, w) in &raw {
        let mut prod = b.constant(c.clone());
        for &s in w.symbols() {
            prod = b.mul(prod, vars[s as usize - 1]);
        }
        sum = Some(match sum {
            None => prod,
            Some(acc) => b.add(acc, prod),
        });
    }
    let circuit = b.finish(sum.unwrap());
    let poly = SparseNCPoly::normalize(Alphabet::Z, nvars, raw).expect("words use declared variables");
    Ok((circuit, poly))
}

#[derive(Clone, Debug)]
enum Expr {
    Var(u32),
    Const(i64),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn random(rng: &mut ChaCha20Rng, nvars: u32, internal: usize) -> Expr {
        if internal == 0 {
            return if rng.gen_bool(0.85) {
                Expr::Var(rng.gen_range(1..=nvars))
            } else {
                let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
                Expr::Const(c)
            };
        }
        let left = rng.gen_range(0..internal);
        let l = Box::new(Expr::random(rng, nvars, left));
        let r = Box::new(Expr::random(rng, nvars, internal - 1 - left));
        if rng.gen_bool(0.5) {
            Expr::Add(l, r)
        } else {
            Expr::Mul(l, r)
        }
    }

    /// Gates this expression adds, not counting shared variable gates.
    fn cost(&self) -> usize {
        match self {
            Expr::Var(_) => 0,
            Expr::Const(_) => 1,
            Expr::Add(a, b) | Expr::Mul(a, b) => 1 + a.cost() + b.cost(),
        }
    }

    fn emit(&self, b: &mut CircuitBuilder, vars: &mut HashMap<u32, usize>) -> usize {
        match self {
            Expr::Var(i) => *vars.entry(*i).or_insert_with(|| b.var(*i)),
            Expr::Const(c) => b.constant(*c),
            Expr::Add(x, y) => {
                let (x, y) = (x.emit(b, vars), y.emit(b, vars));
                b.add(x, y)
            }
            Expr::Mul(x, y) => {
                let (x, y) = (x.emit(b, vars), y.emit(b, vars));
                b.mul(x, y)
            }
        }
    }
}

/// Sums `gates` with a random bracketing and random operand order.
fn random_sum_tree(b: &mut CircuitBuilder, rng: &mut ChaCha20Rng, gates: &[usize]) -> usize {
    if gates.len() == 1 {
        return gates[0];
    }
    let split = rng.gen_range(1..gates.len());
    let l = random_sum_tree(b, rng, &gates[..split]);
    let r = random_sum_tree(b, rng, &gates[split..]);
    if rng.gen_bool(0.5) {
        b.add(l, r)
    } else {
        b.add(r, l)
    }
}

/// A circuit computing the zero polynomial: `g + (-1) g'` where `g` is a
/// left-associated sum of random summands and `g'` is a rebuilt copy of the
/// same summands, permuted and re-bracketed. At most `max(size_hint, 4)`
/// gates when `size_hint >= nvars + 4`.
pub fn gen_zero_circuit(nvars: u32, size_hint: usize, seed: u64) -> Circuit {
    assert!(nvars >= 1);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let side_budget = size_hint.saturating_sub(nvars as usize + 3) / 2;

    let mut summands: Vec<Expr> = Vec::new();
    let mut side_cost = 0;
    loop {
        let internal = rng.gen_range(0..=4);
        let e = Expr::random(&mut rng, nvars, internal);
        let extra = e.cost() + usize::from(!summands.is_empty());
        if !summands.is_empty() && side_cost + extra > side_budget {
            break;
        }
        if summands.is_empty() && extra > side_budget {
            summands.push(Expr::Var(rng.gen_range(1..=nvars)));
            break;
        }
        side_cost += extra;
        summands.push(e);
    }

    let mut b = CircuitBuilder::new(nvars);
    let mut vars = HashMap::new();
    let mut g = None;
    for e in &summands {
        let s = e.emit(&mut b, &mut vars);
        g = Some(match g {
            None => s,
            Some(acc) => b.add(acc, s),
        });
    }
    let g = g.unwrap();

    let mut order: Vec<&Expr> = summands.iter().collect();
    order.shuffle(&mut rng);
    let copies: Vec<usize> = order.iter().map(|e| e.emit(&mut b, &mut vars)).collect();
    let g_copy = random_sum_tree(&mut b, &mut rng, &copies);

    let minus_one = b.constant(-1);
    let neg = if rng.gen_bool(0.5) {
        b.mul(minus_one, g_copy)
    } else {
        b.mul(g_copy, minus_one)
    };
    let out = if rng.gen_bool(0.5) { b.add(g, neg) } else { b.add(neg, g) };
    let circuit = b.finish(out);

    if let Ok(p) = expand_to_sparse(&circuit, 10_000) {
        assert!(p.is_zero(), "generated zero circuit expands to {} terms", p.sparsity());
    }
    circuit
}

impl Circuit {
    /// Number of multiplication gates.
    pub fn mul_count(&self) -> usize {
        self.gates().iter().filter(|g| matches!(g, Gate::Mul(..))).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Matrix, Ring};
    use crate::circuit::DEFAULT_TERM_CAP;

    #[test]
    fn random_instance_matches_its_polynomial() {
        let f = PrimeField::mersenne61();
        for seed in 0..50 {
            let (c, p) = gen_random_instance(3, 5, 1 + (seed as usize % 10), seed, &f).unwrap();
            assert_eq!(expand_to_sparse(&c, DEFAULT_TERM_CAP).unwrap(), p);
            assert_eq!(p.sparsity(), 1 + (seed as usize % 10));
            assert!(p.degree().unwrap() <= 5);
        }
    }

    #[test]
    fn single_term_instance() {
        let f = PrimeField::from_u64(101).unwrap();
        let (c, p) = gen_random_instance(2, 3, 1, 9, &f).unwrap();
        assert_eq!(p.sparsity(), 1);
        assert_eq!(c.gates().iter().filter(|g| matches!(g, Gate::Add(..))).count(), 0);
    }

    #[test]
    fn instances_are_seed_deterministic() {
        let f = PrimeField::mersenne61();
        let a = gen_random_instance(4, 10, 20, 77, &f).unwrap();
        let b = gen_random_instance(4, 10, 20, 77, &f).unwrap();
        assert_eq!(a, b);
        let c = gen_random_instance(4, 10, 20, 78, &f).unwrap();
        assert_ne!(a.1, c.1);
    }

    #[test]
    fn impossible_requests_are_rejected() {
        let f = PrimeField::mersenne61();
        assert!(gen_random_instance(1, 2, 3, 0, &f).is_err());
        assert!(gen_random_instance(1, 3, 3, 0, &f).is_ok());
        assert!(gen_random_instance(2, 3, 0, 0, &f).is_err());
    }

    #[test]
    fn zero_circuits_expand_to_zero_and_evaluate_to_zero() {
        let f = PrimeField::from_u64(101).unwrap();
        for seed in 0..100 {
            let n = 1 + (seed % 5) as u32;
            let c = gen_zero_circuit(n, 60, seed);
            assert!(c.size() <= 60, "size {}", c.size());
            assert!(expand_to_sparse(&c, DEFAULT_TERM_CAP).unwrap().is_zero());
            assert!(c.syntactic_degree_bound().finite().unwrap() >= 1);
            let mut rng = ChaCha20Rng::seed_from_u64(seed + 1000);
            let inputs: Vec<_> = (0..n).map(|_| Matrix::from_fn(3, |_, _| f.sample(&mut rng, false))).collect();
            assert!(c.eval(&f, &inputs, 3).unwrap().is_zero(&f));
        }
    }

    #[test]
    fn tiny_zero_circuit() {
        let c = gen_zero_circuit(3, 0, 5);
        assert!(c.size() <= 4);
        assert!(expand_to_sparse(&c, 10).unwrap().is_zero());
    }

    #[test]
    fn families() {
        let c = power_sum(2, 40);
        assert_eq!(c.size(), 2 * 41 + 1);
        assert_eq!(c.mul_count(), 80);
        let d = difference_with_self(&c);
        assert_eq!(d.size(), c.size() + 3);
        let f = PrimeField::mersenne61();
        let m = Matrix::from_rows(vec![vec![f.elem_u64(3)]]).unwrap();
        assert!(d.eval(&f, &[m.clone(), m], 1).unwrap().is_zero(&f));
        assert!(f.is_zero(&f.zero()));
    }
}
