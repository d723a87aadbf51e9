//! Transition matrices of the substitution automaton.
//!
//! The automaton has states `q0..qK`. In state `q_j` it reads `x_b` and either
//! stays, emitting the block variable `xi_{j+1}`, or moves to `q_{j+1}`,
//! emitting the index variable `y_{b,j+1}`. Its transition matrix on `x_b` is
//! upper-bidiagonal with `xi_1..xi_{K+1}` on the diagonal and
//! `y_{b,1}..y_{b,K}` above it. Entry `(q0, q_j)` of a product along a word
//! sums, over every choice of `j` positions where the automaton advanced, the
//! commutative monomial recording that choice.

use rand::Rng;

use crate::algebra::{CommPoly, CommPolyRing, FieldElem, Matrix, PrimeField, Ring, Var};

/// Values for the `3K + 1` automaton variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionAssignment<T> {
    k: usize,
    xi: Vec<T>,
    y: [Vec<T>; 2],
}

impl<T> SubstitutionAssignment<T> {
    pub fn new(xi: Vec<T>, y0: Vec<T>, y1: Vec<T>) -> Self {
        assert!(!xi.is_empty(), "need at least xi_1");
        let k = xi.len() - 1;
        assert!(y0.len() == k && y1.len() == k, "need K index values per bit");
        SubstitutionAssignment { k, xi, y: [y0, y1] }
    }

    /// Number of index steps `K`; matrices have dimension `K + 1`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// `xi_j`, `1 <= j <= K + 1`.
    pub fn xi(&self, j: usize) -> &T {
        &self.xi[j - 1]
    }

    /// `y_{b,j}`, `1 <= j <= K`.
    pub fn y(&self, b: usize, j: usize) -> &T {
        &self.y[b][j - 1]
    }

    pub fn len(&self) -> usize {
        3 * self.k + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Values in draw order: `xi_1, y0_1, y1_1, xi_2, ..., xi_{K+1}`.
    pub fn values(&self) -> Vec<&T> {
        let mut out = Vec::with_capacity(self.len());
        for j in 0..self.k {
            out.extend([&self.xi[j], &self.y[0][j], &self.y[1][j]]);
        }
        out.push(&self.xi[self.k]);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionMatrices<T> {
    pub mx0: Matrix<T>,
    pub mx1: Matrix<T>,
}

impl<T: Clone + PartialEq + std::fmt::Debug> SubstitutionMatrices<T> {
    pub fn dim(&self) -> usize {
        self.mx0.dim()
    }

    /// The matrix substituted for `x_b`.
    pub fn for_bit(&self, b: u32) -> &Matrix<T> {
        if b == 0 {
            &self.mx0
        } else {
            &self.mx1
        }
    }
}

pub fn build_substitution_matrices<R: Ring>(
    ring: &R,
    assignment: &SubstitutionAssignment<R::Elem>,
) -> SubstitutionMatrices<R::Elem> {
    let dim = assignment.k + 1;
    let build = |b: usize| {
        Matrix::from_fn(dim, |r, c| {
            if r == c {
                assignment.xi[r].clone()
            } else if c == r + 1 {
                assignment.y[b][r].clone()
            } else {
                ring.zero()
            }
        })
    };
    SubstitutionMatrices {
        mx0: build(0),
        mx1: build(1),
    }
}

/// Independent uniform field values for all `3K + 1` slots, drawn in the
/// order of [`SubstitutionAssignment::values`].
pub fn random_assignment<G: Rng + ?Sized>(k: usize, field: &PrimeField, rng: &mut G) -> SubstitutionAssignment<FieldElem> {
    let mut xi = Vec::with_capacity(k + 1);
    let mut y0 = Vec::with_capacity(k);
    let mut y1 = Vec::with_capacity(k);
    for _ in 0..k {
        xi.push(field.sample(rng, false));
        y0.push(field.sample(rng, false));
        y1.push(field.sample(rng, false));
    }
    xi.push(field.sample(rng, false));
    SubstitutionAssignment::new(xi, y0, y1)
}

/// Every slot a distinct commuting indeterminate.
pub fn symbolic_assignment(k: usize) -> SubstitutionAssignment<CommPoly> {
    let k32 = k as u32;
    SubstitutionAssignment::new(
        (1..=k32 + 1).map(|j| CommPoly::var(Var::xi(j))).collect(),
        (1..=k32).map(|j| CommPoly::var(Var::y(0, j))).collect(),
        (1..=k32).map(|j| CommPoly::var(Var::y(1, j))).collect(),
    )
}

pub fn symbolic_matrices(k: usize) -> SubstitutionMatrices<CommPoly> {
    build_substitution_matrices(&CommPolyRing, &symbolic_assignment(k))
}

/// `N_i = M_x0 * M_x1^i * M_x0` for `i = 1..=n`: the images of `z_i` under
/// the bivariate encoding `z_i -> x0 x1^i x0`.
pub fn encoded_variable_matrices<R: Ring>(
    ring: &R,
    sm: &SubstitutionMatrices<R::Elem>,
    n: usize,
) -> Vec<Matrix<R::Elem>> {
    (1..=n as u64)
        .map(|i| {
            let middle = sm.mx1.pow(ring, i);
            sm.mx0
                .mul(ring, &middle)
                .and_then(|m| m.mul(ring, &sm.mx0))
                .expect("substitution matrices share a dimension")
        })
        .collect()
}
