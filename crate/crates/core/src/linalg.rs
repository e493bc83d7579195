//! Exact linear algebra over a field: dense solving and rank, and an
//! incremental sparse eliminator for rank computations on chain complexes.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field operations needed by the elimination routines.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Whether results are exact (as opposed to reductions modulo a prime).
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
}

/// The prime field of order `2^61 - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp(u64);

impl Fp {
    pub const MODULUS: u64 = (1 << 61) - 1;

    pub fn new(v: u64) -> Self {
        Fp(v % Self::MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Fp {
    const EXACT: bool = false;

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(v: i64) -> Self {
        let m = Self::MODULUS as i128;
        Fp((v as i128).rem_euclid(m) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= Self::MODULUS { s - Self::MODULUS } else { s })
    }
    fn sub(&self, other: &Self) -> Self {
        Fp(if self.0 >= other.0 { self.0 - other.0 } else { self.0 + Self::MODULUS - other.0 })
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 * other.0 as u128) % Self::MODULUS as u128) as u64)
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { Self::MODULUS - self.0 })
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(Self::MODULUS - 2)
    }
}

/// Reduces `m` to row echelon form in place and returns the pivot columns.
fn echelon<F: Field>(m: &mut [Vec<F>], n_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n_cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inv();
        for v in m[row].iter_mut() {
            *v = v.mul(&inv);
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (v, p) in r.iter_mut().zip(&pivot_row) {
                    *v = v.sub(&f.mul(p));
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Rank of a dense matrix given by rows.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    echelon(&mut m, n_cols).len()
}

/// A solution of `a x = b` (`a` given by rows), or `None` if inconsistent.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][n].clone();
    }
    Some(x)
}

/// Incremental Gaussian elimination on sparse vectors, keyed by pivot index.
#[derive(Debug, Clone)]
pub struct SparseEliminator<F: Field> {
    pivots: BTreeMap<usize, BTreeMap<usize, F>>,
}

impl<F: Field> Default for SparseEliminator<F> {
    fn default() -> Self {
        Self { pivots: BTreeMap::new() }
    }
}

impl<F: Field> SparseEliminator<F> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vector; returns whether it was independent of the previous ones.
    pub fn insert(&mut self, mut v: BTreeMap<usize, F>) -> bool {
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((&lead, coef)) = v.iter().next() else { return false };
            match self.pivots.get(&lead) {
                None => {
                    let inv = coef.inv();
                    for c in v.values_mut() {
                        *c = c.mul(&inv);
                    }
                    self.pivots.insert(lead, v);
                    return true;
                }
                Some(p) => {
                    let f = coef.clone();
                    for (&k, c) in p {
                        let e = v.entry(k).or_insert_with(F::zero);
                        *e = e.sub(&f.mul(c));
                        if e.is_zero() {
                            v.remove(&k);
                        }
                    }
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Rank of a sparse matrix given by its columns.
pub fn sparse_rank<F: Field>(columns: impl IntoIterator<Item = BTreeMap<usize, F>>) -> usize {
    let mut e = SparseEliminator::new();
    for c in columns {
        e.insert(c);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_i64(v)
    }

    #[test]
    fn fp_arithmetic() {
        let a = Fp::from_i64(-3);
        assert_eq!(a.add(&Fp::new(3)), Fp::zero());
        let b = Fp::new(123_456_789);
        assert_eq!(b.mul(&b.inv()), Fp::one());
        assert_eq!(Fp::new(Fp::MODULUS - 1).mul(&Fp::new(Fp::MODULUS - 1)), Fp::one());
    }

    #[test]
    fn dense_rank_and_solve() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank(&a), 2);
        let x = solve(&a, &[q(6), q(12), q(2)]).unwrap();
        for (row, rhs) in a.iter().zip([6, 12, 2]) {
            let lhs = row.iter().zip(&x).fold(q(0), |acc, (r, v)| acc + r * v);
            assert_eq!(lhs, q(rhs));
        }
        assert!(solve(&a, &[q(1), q(1), q(1)]).is_none());
    }

    #[test]
    fn sparse_matches_dense() {
        let cols: Vec<BTreeMap<usize, Fp>> = vec![
            [(0, Fp::new(1)), (2, Fp::new(1))].into(),
            [(1, Fp::new(1)), (2, Fp::new(1))].into(),
            [(0, Fp::new(1)), (1, Fp::new(1))].into(),
        ];
        assert_eq!(sparse_rank(cols), 3);
        let dep: Vec<BTreeMap<usize, Fp>> = vec![
            [(0, Fp::new(1)), (1, Fp::new(1))].into(),
            [(1, Fp::new(1)), (2, Fp::new(1))].into(),
            [(0, Fp::new(1)), (2, Fp::from_i64(-1))].into(),
        ];
        assert_eq!(sparse_rank(dep), 2);
    }
}
