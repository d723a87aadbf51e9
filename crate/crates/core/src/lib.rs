//! Randomized black-box identity testing for sparse noncommutative
//! polynomials.
//!
//! A polynomial in noncommuting variables `z1..zn` is given as an arithmetic
//! circuit (or any [`circuit::BlackBox`] that evaluates on matrices). The
//! tester in [`pit`] substitutes small upper-bidiagonal matrices built from a
//! nondeterministic substitution automaton ([`autmat`]) and checks the output
//! for a nonzero entry. The matrix dimension depends on the logarithm of the
//! number of monomials, not on the degree, so circuits of exponential degree
//! are handled.
//!
//! [`ncpoly`] and [`circuit::expand_to_sparse`] give an explicit brute-force
//! ground truth, [`isolate`] implements the halving procedure for isolating
//! index sets, and [`pit::symbolic_theorem_check`] verifies the nonvanishing
//! argument exactly over integer polynomials.
//!
//! ```
//! use ncpit::circuit::CircuitBuilder;
//! use ncpit::pit::{plan_for_circuit, PlanOptions, TesterRegistry};
//!
//! // z1 z2 - z2 z1
//! let mut b = CircuitBuilder::new(2);
//! let (z1, z2) = (b.var(1), b.var(2));
//! let (l, r) = (b.mul(z1, z2), b.mul(z2, z1));
//! let out = b.sub(l, r);
//! let circuit = b.finish(out);
//!
//! let opts = PlanOptions { log2_sparsity: Some(1), seed: 7, ..PlanOptions::default() };
//! let plan = plan_for_circuit(&circuit, &opts).unwrap();
//! let verdict = TesterRegistry::default().get("nfa").unwrap().run(&circuit, &plan.request).unwrap();
//! assert!(verdict.is_nonzero());
//! assert_eq!(verdict.max_dim, 2);
//! ```

pub mod algebra;
pub mod autmat;
pub mod circuit;
pub mod isolate;
pub mod ncpoly;
pub mod pit;

pub use algebra::{CommPoly, FieldElem, Matrix, PrimeField, Ring};
pub use circuit::{BlackBox, Circuit};
pub use ncpoly::{Alphabet, SparseNCPoly, Word};
