//! Vectors and matrices over GF(2).
//!
//! A vector `(x_1, ..., x_n)` is stored as the integer
//! `|x| = sum x_{n-j} 2^j`, so `x_1` is the most significant bit. The same
//! integer is the truth-table index of the point, which makes lexicographic
//! order on vectors plain integer order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 24;

pub(crate) fn check_vars(n: usize) -> Result<()> {
    if (1..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount(n))
    }
}

#[inline]
pub(crate) fn parity(x: u32) -> bool {
    x.count_ones() & 1 == 1
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    n: u8,
    bits: u32,
}

impl BitVector {
    pub fn zero(n: usize) -> Self {
        Self { n: n as u8, bits: 0 }
    }

    /// The vector whose integer representation is `index`.
    pub fn from_index(index: u64, n: usize) -> Result<Self> {
        if n > 32 || index >= 1u64 << n {
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(Self { n: n as u8, bits: index as u32 })
    }

    /// Unchecked constructor for internal use; high bits are masked off.
    pub(crate) fn new(bits: u32, n: usize) -> Self {
        Self { n: n as u8, bits: bits & mask(n) }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let v = bits.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
        Self { n: bits.len() as u8, bits: v }
    }

    /// Unit vector with a one in coordinate `i` (1-based, `b_i`).
    pub fn unit(i: usize, n: usize) -> Self {
        assert!((1..=n).contains(&i));
        Self::new(1 << (n - i), n)
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Lexicographic index `|x|`.
    pub fn index(&self) -> u32 {
        self.bits
    }

    /// Coordinate `x_i`, 1-based.
    pub fn get(&self, i: usize) -> bool {
        assert!((1..=self.len()).contains(&i));
        (self.bits >> (self.len() - i)) & 1 == 1
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (1..=self.len()).map(|i| self.get(i)).collect()
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        parity(self.bits & other.bits)
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Self {
        Self::new((self.bits << other.n) | other.bits, self.len() + other.len())
    }
}

impl std::ops::Add for BitVector {
    type Output = BitVector;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        Self { n: self.n, bits: self.bits ^ rhs.bits }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.len() > 32 {
            return Err(Error::Parse { pos: 0, msg: format!("bad binary vector length {}", s.len()) });
        }
        let mut bits = 0u32;
        for (pos, c) in s.chars().enumerate() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::Parse { pos, msg: format!("unexpected {c:?} in binary vector") }),
                };
        }
        Ok(Self::new(bits, s.len()))
    }
}

#[inline]
pub(crate) fn mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Incremental echelon basis of a set of vectors packed as integers.
///
/// Each stored row is keyed by its leading bit, so membership and
/// reduction are a single pass over at most 32 rows.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<u32>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn reduce(&self, mut x: u32) -> u32 {
        for &r in &self.rows {
            x = x.min(x ^ r);
        }
        x
    }

    /// Adds `x`, returning whether it was independent of the current rows.
    pub(crate) fn insert(&mut self, x: u32) -> bool {
        let r = self.reduce(x);
        if r == 0 {
            return false;
        }
        self.rows.push(r);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub(crate) fn contains(&self, x: u32) -> bool {
        self.reduce(x) == 0
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Rank of a set of vectors.
pub(crate) fn rank_of(vs: impl IntoIterator<Item = u32>) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// A maximal linearly independent subset, in first-seen order.
pub(crate) fn independent_subset(vs: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut e = Echelon::new();
    vs.into_iter().filter(|&v| e.insert(v)).collect()
}

/// All `2^k` combinations of `basis`, indexed so that combination `i` uses
/// basis element `j` when bit `k-1-j` of `i` is set (lexicographic order
/// when the basis is the unit vectors).
pub(crate) fn span(basis: &[u32]) -> Vec<u32> {
    let k = basis.len();
    (0..1u32 << k)
        .map(|i| {
            (0..k).filter(|j| (i >> (k - 1 - j)) & 1 == 1).fold(0, |acc, j| acc ^ basis[j])
        })
        .collect()
}

/// Dense binary matrix; row `r` is packed like a [`BitVector`] of length
/// `cols` (column 1 is the most significant bit).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: Vec<u32>,
    cols: usize,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= 32);
        Self { rows: vec![0; rows], cols }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= 32);
        Self { rows: (0..n).map(|r| 1u32 << (n - 1 - r)).collect(), cols: n }
    }

    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self { rows: rows.iter().map(|r| r.index()).collect(), cols })
    }

    pub(crate) fn from_packed(rows: Vec<u32>, cols: usize) -> Self {
        Self { rows, cols }
    }

    /// Parses `rows` binary rows given as one row-major string of `rows*cols` bits.
    pub fn from_row_major(s: &str, rows: usize, cols: usize) -> Result<Self> {
        let s = s.trim();
        if s.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: s.len() });
        }
        let rows = (0..rows)
            .map(|r| s[r * cols..(r + 1) * cols].parse::<BitVector>().map(|v| v.index()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector::new(self.rows[r], self.cols)
    }

    /// Entry at `(r, c)`, 0-based.
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.rows[r] >> (self.cols - 1 - c)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let bit = 1u32 << (self.cols - 1 - c);
        if value {
            self.rows[r] |= bit;
        } else {
            self.rows[r] &= !bit;
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Row-vector product `x M` on packed vectors.
    #[inline]
    pub(crate) fn apply(&self, x: u32) -> u32 {
        let n = self.rows.len();
        let mut acc = 0;
        let mut x = x;
        while x != 0 {
            let bit = x.trailing_zeros() as usize;
            acc ^= self.rows[n - 1 - bit];
            x &= x - 1;
        }
        acc
    }

    /// Row-vector product `x M`.
    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.rows() {
            return Err(Error::DimensionMismatch { expected: self.rows(), found: x.len() });
        }
        Ok(BitVector::new(self.apply(x.index()), self.cols))
    }

    pub fn mul(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.rows() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows() });
        }
        Ok(Self { rows: self.rows.iter().map(|&r| other.apply(r)).collect(), cols: other.cols })
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = Self::zeros(self.cols, self.rows());
        for r in 0..self.rows() {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        rank_of(self.rows.iter().copied())
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows()
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<BinaryMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows(), found: self.cols });
        }
        let n = self.cols;
        let mut a = self.rows.clone();
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let bit = 1u32 << (n - 1 - col);
            let pivot = (col..n).find(|&r| a[r] & bit != 0).ok_or(Error::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r] & bit != 0 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Ok(Self { rows: inv, cols: n })
    }

    /// A uniformly random invertible `n x n` matrix, reproducible per seed.
    pub fn random_invertible(n: usize, seed: u64) -> BinaryMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_invertible_with(n, &mut rng)
    }

    pub fn random_invertible_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BinaryMatrix {
        let mut e = Echelon::new();
        let mut rows = Vec::with_capacity(n);
        while rows.len() < n {
            let r = rng.gen::<u32>() & mask(n);
            if e.insert(r) {
                rows.push(r);
            }
        }
        Self { rows, cols: n }
    }

    /// Row-major string of all entries.
    pub fn to_row_major(&self) -> String {
        (0..self.rows()).map(|r| self.row(r).to_string()).collect()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows()).map(|r| self.row(r).to_string())).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn involutory_matrix() -> BinaryMatrix {
        BinaryMatrix::from_row_major("1000001000001000001011011", 5, 5).unwrap()
    }

    #[test]
    fn vector_from_index_msb_left() {
        assert_eq!(BitVector::from_index(0, 3).unwrap().to_bits(), vec![false; 3]);
        assert_eq!(BitVector::from_index(3, 3).unwrap().to_string(), "011");
        assert_eq!(BitVector::from_index(13, 4).unwrap().to_string(), "1101");
        assert!(BitVector::from_index(8, 3).is_err());
    }

    #[test]
    fn index_round_trip() {
        for n in 1..=10 {
            for i in 0..1u64 << n {
                let v = BitVector::from_index(i, n).unwrap();
                assert_eq!(v.index() as u64, i);
                assert_eq!(BitVector::from_bits(&v.to_bits()), v);
            }
        }
    }

    #[test]
    fn identity_rank_and_inverse() {
        let i4 = BinaryMatrix::identity(4);
        assert_eq!(i4.rank(), 4);
        assert_eq!(i4.inverse().unwrap(), i4);
    }

    #[test]
    fn repeated_rows_lose_rank() {
        let m = BinaryMatrix::from_row_major("101110110101", 3, 4).unwrap();
        assert!(m.rank() < 3);
        assert_eq!(m.inverse().unwrap_err(), Error::DimensionMismatch { expected: 3, found: 4 });
        let sq = BinaryMatrix::from_row_major("110110001", 3, 3).unwrap();
        assert_eq!(sq.inverse().unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn involutory_matrix_inverse() {
        let a = involutory_matrix();
        assert_eq!(a.rank(), 5);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), BinaryMatrix::identity(5));
        // Over GF(2) this A squares to the identity, so it is its own inverse.
        assert_eq!(inv, a);
    }

    #[test]
    fn row_vector_product() {
        let a = involutory_matrix();
        // (x1..x5) A = (x1+x5, x2+x5, x3, x4+x5, x5)
        let x: BitVector = "00001".parse().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap().to_string(), "11011");
        let x: BitVector = "10100".parse().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap().to_string(), "10100");
    }

    #[test]
    fn random_invertible_is_deterministic() {
        for n in 1..=12 {
            for seed in 0..20 {
                let m = BinaryMatrix::random_invertible(n, seed);
                assert_eq!(m.rank(), n);
                assert_eq!(m, BinaryMatrix::random_invertible(n, seed));
                assert_eq!(m.transpose().transpose(), m);
                assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), BinaryMatrix::identity(n));
            }
        }
    }

    #[test]
    fn span_is_lexicographic_for_unit_basis() {
        let basis = [0b100, 0b010, 0b001];
        assert_eq!(span(&basis), (0..8).collect::<Vec<_>>());
    }
}
