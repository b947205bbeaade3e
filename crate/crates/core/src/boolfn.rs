//! Truth tables, algebraic normal form and affine transforms of the input.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::{check_vars, parity, BinaryMatrix, BitVector};
use crate::error::{Error, Result};

/// A Boolean function `F_2^n -> F_2` as a bit-packed truth table.
///
/// Table entry `i` is `f(x)` where `|x| = i`, i.e. the table reads
/// `f(0..00), f(0..01), ..., f(1..11)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

fn words_for(n: usize) -> usize {
    if n >= 6 {
        1 << (n - 6)
    } else {
        1
    }
}

fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

impl BooleanFunction {
    pub fn zero(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self { n, words: vec![0; words_for(n)] })
    }

    pub fn one(n: usize) -> Result<Self> {
        let mut f = Self::zero(n)?;
        f.words.iter_mut().for_each(|w| *w = u64::MAX);
        f.mask_tail();
        Ok(f)
    }

    /// Tabulates `eval` at every point, passing the point's index.
    pub fn from_fn(n: usize, mut eval: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut f = Self::zero(n)?;
        for x in 0..1u32 << n {
            if eval(x) {
                f.words[(x >> 6) as usize] |= 1 << (x & 63);
            }
        }
        Ok(f)
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        if !bits.len().is_power_of_two() || bits.len() < 2 {
            return Err(Error::DimensionMismatch { expected: bits.len().next_power_of_two(), found: bits.len() });
        }
        let n = bits.len().trailing_zeros() as usize;
        Self::from_fn(n, |x| bits[x as usize])
    }

    /// The linear function `a . x`.
    pub fn linear(a: &BitVector) -> Result<Self> {
        let (n, a) = (a.len(), a.index());
        Self::from_fn(n, |x| parity(a & x))
    }

    /// The coordinate function `x_i` on `n` variables (1-based).
    pub fn variable(i: usize, n: usize) -> Result<Self> {
        if !(1..=n).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i as u64, n });
        }
        let shift = n - i;
        Self::from_fn(n, |x| (x >> shift) & 1 == 1)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: u32) -> bool {
        (self.words[(x >> 6) as usize] >> (x & 63)) & 1 == 1
    }

    pub fn eval(&self, x: &BitVector) -> bool {
        assert_eq!(x.len(), self.n);
        self.get(x.index())
    }

    pub fn set(&mut self, x: u32, value: bool) {
        let w = &mut self.words[(x >> 6) as usize];
        if value {
            *w |= 1 << (x & 63);
        } else {
            *w &= !(1 << (x & 63));
        }
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.len() as u64
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len() as u32).map(|x| self.get(x)).collect()
    }

    /// `(-1)^f(x)` for every point.
    pub fn signs(&self) -> Vec<i32> {
        (0..self.len() as u32).map(|x| if self.get(x) { -1 } else { 1 }).collect()
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        let mut f = Self { n, words };
        f.mask_tail();
        f
    }

    fn mask_tail(&mut self) {
        let m = tail_mask(self.n);
        if let Some(w) = self.words.last_mut() {
            *w &= m;
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(Self { n: self.n, words })
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Ok(Self { n: self.n, words })
    }

    pub fn complement(&self) -> Self {
        let mut f = Self { n: self.n, words: self.words.iter().map(|w| !w).collect() };
        f.mask_tail();
        f
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<u64> {
        Ok(self.xor(other)?.weight())
    }

    /// `sum_x (-1)^{f(x) + g(x)}`.
    pub fn correlation(&self, other: &Self) -> Result<i64> {
        let d = self.hamming_distance(other)? as i64;
        Ok(self.len() as i64 - 2 * d)
    }

    /// Möbius transform of the table, in place on words.
    fn moebius(words: &mut [u64], n: usize) {
        const MASKS: [u64; 6] = [
            0x5555_5555_5555_5555,
            0x3333_3333_3333_3333,
            0x0F0F_0F0F_0F0F_0F0F,
            0x00FF_00FF_00FF_00FF,
            0x0000_FFFF_0000_FFFF,
            0x0000_0000_FFFF_FFFF,
        ];
        for (j, m) in MASKS.iter().enumerate().take(n.min(6)) {
            for w in words.iter_mut() {
                *w ^= (*w & m) << (1 << j);
            }
        }
        for j in 6..n {
            let step = 1 << (j - 6);
            for w in 0..words.len() {
                if w & step != 0 {
                    words[w] ^= words[w ^ step];
                }
            }
        }
    }

    pub fn to_anf(&self) -> AnfPolynomial {
        let mut words = self.words.clone();
        Self::moebius(&mut words, self.n);
        let coeffs = Self::from_words(self.n, words);
        let monomials = (0..self.len() as u32).filter(|&u| coeffs.get(u)).collect();
        AnfPolynomial { n: self.n, monomials }
    }

    pub fn degree(&self) -> usize {
        let mut words = self.words.clone();
        Self::moebius(&mut words, self.n);
        let coeffs = Self::from_words(self.n, words);
        (0..self.len() as u32).filter(|&u| coeffs.get(u)).map(|u| u.count_ones() as usize).max().unwrap_or(0)
    }

    /// Whether `f` does not depend on coordinate `x_i` (1-based).
    pub fn independent_of(&self, i: usize) -> bool {
        let bit = 1u32 << (self.n - i);
        (0..self.len() as u32).filter(|x| x & bit == 0).all(|x| self.get(x) == self.get(x | bit))
    }

    /// `h(x) = f(xA + b) + c.x + eps`.
    pub fn apply_affine(&self, a: &BinaryMatrix, b: &BitVector, c: &BitVector, eps: bool) -> Result<Self> {
        let n = self.n;
        if a.rows() != n || a.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: a.rows().max(a.cols()) });
        }
        for v in [b, c] {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        if !a.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        let (b, c) = (b.index(), c.index());
        Self::from_fn(n, |x| self.get(a.apply(x) ^ b) ^ parity(c & x) ^ eps)
    }

    /// Concatenation of tables; the index of each part becomes the high bits.
    pub fn concat(parts: &[BooleanFunction]) -> Result<Self> {
        let first = parts.first().ok_or(Error::Precondition("no functions to concatenate".into()))?;
        if !parts.len().is_power_of_two() {
            return Err(Error::Precondition(format!("{} parts is not a power of two", parts.len())));
        }
        let s = parts.len().trailing_zeros() as usize;
        let n = first.n;
        for p in parts {
            first.check_same(p)?;
        }
        Self::from_fn(n + s, |x| parts[(x >> n) as usize].get(x & ((1 << n) - 1)))
    }

    /// Big-endian hex of the table, index 0 in the top bit of the first digit.
    pub fn to_hex(&self) -> String {
        let bits = self.len();
        let digits = bits.div_ceil(4);
        (0..digits)
            .map(|d| {
                let nibble = (0..4).fold(0u32, |acc, k| {
                    let i = d * 4 + k;
                    (acc << 1) | (i < bits && self.get(i as u32)) as u32
                });
                char::from_digit(nibble, 16).unwrap().to_ascii_uppercase()
            })
            .collect()
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        check_vars(n)?;
        let bits = 1usize << n;
        let digits = bits.div_ceil(4);
        if hex.len() != digits {
            return Err(Error::Parse { pos: 0, msg: format!("expected {digits} hex digits for n = {n}, found {}", hex.len()) });
        }
        let mut f = Self::zero(n)?;
        for (d, c) in hex.chars().enumerate() {
            let nibble = c.to_digit(16).ok_or_else(|| Error::Parse { pos: d, msg: format!("bad hex digit {c:?}") })?;
            for k in 0..4 {
                let bit = (nibble >> (3 - k)) & 1 == 1;
                let i = d * 4 + k;
                if i < bits {
                    f.set(i as u32, bit);
                } else if bit {
                    return Err(Error::Parse { pos: d, msg: "nonzero padding bit".into() });
                }
            }
        }
        Ok(f)
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(tt:{}:{})", self.n, self.to_hex())
    }
}

/// Algebraic normal form: the set of monomials `x^u`, each stored as its
/// exponent vector's index `|u|`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AnfPolynomial {
    n: usize,
    monomials: BTreeSet<u32>,
}

impl AnfPolynomial {
    pub fn new(n: usize, monomials: impl IntoIterator<Item = BitVector>) -> Result<Self> {
        check_vars(n)?;
        let mut set = BTreeSet::new();
        for u in monomials {
            if u.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: u.len() });
            }
            // x^u + x^u = 0
            if !set.insert(u.index()) {
                set.remove(&u.index());
            }
        }
        Ok(Self { n, monomials: set })
    }

    /// Builds a polynomial from monomials written as lists of 1-based
    /// variable indices; an empty list is the constant term.
    pub fn from_terms(n: usize, terms: &[&[usize]]) -> Result<Self> {
        let monomials = terms
            .iter()
            .map(|t| {
                let mut u = 0u32;
                for &i in t.iter() {
                    if !(1..=n).contains(&i) {
                        return Err(Error::IndexOutOfRange { index: i as u64, n });
                    }
                    u |= 1 << (n - i);
                }
                Ok(BitVector::new(u, n))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, monomials)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.monomials.iter().map(|&u| BitVector::new(u, self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.monomials.iter().map(|u| u.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn to_truth_table(&self) -> BooleanFunction {
        let mut words = vec![0u64; words_for(self.n)];
        for &u in &self.monomials {
            words[(u >> 6) as usize] |= 1 << (u & 63);
        }
        BooleanFunction::moebius(&mut words, self.n);
        BooleanFunction::from_words(self.n, words)
    }

    /// Direct evaluation of the monomial sum at one point.
    pub fn eval(&self, x: &BitVector) -> bool {
        let x = x.index();
        self.monomials.iter().filter(|&&u| u & x == u).count() % 2 == 1
    }
}

impl fmt::Display for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<Vec<usize>> = self
            .monomials
            .iter()
            .map(|&u| (1..=self.n).filter(|i| (u >> (self.n - i)) & 1 == 1).collect())
            .collect();
        terms.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let rendered: Vec<String> = terms
            .iter()
            .map(|t| {
                if t.is_empty() {
                    "1".to_string()
                } else {
                    t.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join("*")
                }
            })
            .collect();
        f.write_str(&rendered.join("+"))
    }
}
