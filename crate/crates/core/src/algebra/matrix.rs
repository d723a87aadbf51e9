use super::ring::Ring;
use super::AlgebraError;

/// Dense square matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(dim > 0, "matrices must have positive dimension");
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, AlgebraError> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(AlgebraError::NotSquare);
        }
        Ok(Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.entries[row * self.dim + col] = value;
    }

    /// Entries with their coordinates, row-major.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let dim = self.dim;
        self.entries.iter().enumerate().map(move |(i, e)| (i / dim, i % dim, e))
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }
}

impl<T: Clone + PartialEq + std::fmt::Debug> Matrix<T> {
    pub fn zero<R: Ring<Elem = T>>(ring: &R, dim: usize) -> Self {
        Self::from_fn(dim, |_, _| ring.zero())
    }

    pub fn identity<R: Ring<Elem = T>>(ring: &R, dim: usize) -> Self {
        Self::scalar(ring, dim, ring.one())
    }

    /// `c` times the identity.
    pub fn scalar<R: Ring<Elem = T>>(ring: &R, dim: usize, c: T) -> Self {
        let zero = ring.zero();
        Self::from_fn(dim, |r, col| if r == col { c.clone() } else { zero.clone() })
    }

    pub fn is_zero<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.entries.iter().all(|e| ring.is_zero(e))
    }

    pub fn is_upper_triangular<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.iter().all(|(r, c, e)| r <= c || ring.is_zero(e))
    }

    fn check_dims(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        Ok(Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        })
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Self {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| ring.mul(c, e)).collect(),
        }
    }

    /// `self * other`, operand order preserved.
    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = ring.zero();
                for k in 0..n {
                    let a = &self.entries[r * n + k];
                    let b = &other.entries[k * n + c];
                    if ring.is_zero(a) || ring.is_zero(b) {
                        continue;
                    }
                    acc = ring.add(&acc, &ring.mul(a, b));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { dim: n, entries })
    }

    /// `self^exp` by repeated squaring; `self^0` is the identity.
    pub fn pow<R: Ring<Elem = T>>(&self, ring: &R, mut exp: u64) -> Self {
        let mut result = Self::identity(ring, self.dim);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(ring, &base).expect("same dimension");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(ring, &base).expect("same dimension");
            }
        }
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn random(f: &PrimeField, dim: usize, rng: &mut ChaCha20Rng) -> Matrix<crate::algebra::FieldElem> {
        Matrix::from_fn(dim, |_, _| f.sample(rng, false))
    }

    fn ints(f: &PrimeField, rows: &[&[u64]]) -> Matrix<crate::algebra::FieldElem> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| f.elem_u64(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let f = PrimeField::from_u64(101).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let a = random(&f, 3, &mut rng);
        let id = Matrix::identity(&f, 3);
        assert_eq!(a.mul(&f, &id).unwrap(), a);
        assert_eq!(id.mul(&f, &a).unwrap(), a);
    }

    #[test]
    fn nilpotent_square_is_zero() {
        let f = PrimeField::from_u64(101).unwrap();
        let n = ints(&f, &[&[0, 1], &[0, 0]]);
        assert!(n.mul(&f, &n).unwrap().is_zero(&f));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let f = PrimeField::from_u64(101).unwrap();
        let a = Matrix::identity(&f, 2);
        let b = Matrix::identity(&f, 3);
        assert_eq!(a.mul(&f, &b), Err(AlgebraError::DimMismatch { left: 2, right: 3 }));
        assert!(a.add(&f, &b).is_err());
    }

    #[test]
    fn upper_triangular_closed_under_product() {
        let f = PrimeField::from_u64(101).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for dim in 1..=5 {
            for _ in 0..20 {
                let mut a = random(&f, dim, &mut rng);
                let mut b = random(&f, dim, &mut rng);
                for r in 0..dim {
                    for c in 0..r {
                        a.set(r, c, f.zero());
                        b.set(r, c, f.zero());
                    }
                }
                assert!(a.mul(&f, &b).unwrap().is_upper_triangular(&f));
            }
        }
    }

    #[test]
    fn associativity_on_random_triples() {
        let f = PrimeField::from_u64(101).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        for dim in 1..=4 {
            for _ in 0..20 {
                let a = random(&f, dim, &mut rng);
                let b = random(&f, dim, &mut rng);
                let c = random(&f, dim, &mut rng);
                let left = a.mul(&f, &b).unwrap().mul(&f, &c).unwrap();
                let right = a.mul(&f, &b.mul(&f, &c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn pow_small_exponents() {
        let f = PrimeField::from_u64(101).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        let a = random(&f, 3, &mut rng);
        assert_eq!(a.pow(&f, 0), Matrix::identity(&f, 3));
        assert_eq!(a.pow(&f, 1), a);
        for e in 0..=8u64 {
            let naive = (0..e).fold(Matrix::identity(&f, 3), |acc, _| acc.mul(&f, &a).unwrap());
            assert_eq!(a.pow(&f, e), naive, "e = {e}");
        }
    }

    #[test]
    fn from_rows_rejects_ragged() {
        assert_eq!(Matrix::from_rows(vec![vec![1, 2], vec![3]]), Err(AlgebraError::NotSquare));
        assert_eq!(Matrix::<u8>::from_rows(vec![]), Err(AlgebraError::NotSquare));
    }
}
