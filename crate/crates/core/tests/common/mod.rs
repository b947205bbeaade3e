//! Definition-level oracles shared by the integration tests. Nothing here
//! calls the fast transforms or the elimination routines of the library.
#![allow(dead_code)]

use plateaued::{BinaryMatrix, BitVector, BooleanFunction};
use rand::Rng;

pub fn f(spec: &str) -> BooleanFunction {
    plateaued::parse_function(spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

pub fn dot(a: u32, b: u32) -> bool {
    (a & b).count_ones() % 2 == 1
}

pub fn sign(b: bool) -> i64 {
    if b {
        -1
    } else {
        1
    }
}

/// `W_f(u) = sum_x (-1)^{f(x) + u.x}` as a double loop.
pub fn walsh(f: &BooleanFunction) -> Vec<i64> {
    let size = 1u32 << f.num_vars();
    (0..size).map(|u| (0..size).map(|x| sign(f.get(x) ^ dot(u, x))).sum()).collect()
}

/// `Delta_f(a) = sum_x (-1)^{f(x) + f(x+a)}`.
pub fn autocorr(f: &BooleanFunction) -> Vec<i64> {
    let size = 1u32 << f.num_vars();
    (0..size).map(|a| (0..size).map(|x| sign(f.get(x) ^ f.get(x ^ a))).sum()).collect()
}

/// ANF coefficients by the subset-sum definition `a_m = sum_{x <= m} f(x)`.
pub fn anf_coefficients(f: &BooleanFunction) -> Vec<bool> {
    let size = 1u32 << f.num_vars();
    (0..size)
        .map(|m| (0..size).filter(|&x| x & !m == 0).fold(false, |acc, x| acc ^ f.get(x)))
        .collect()
}

/// Evaluates the monomials `m` with `m <= x` at `x`.
pub fn eval_anf(coeffs: &[bool], x: u32) -> bool {
    coeffs.iter().enumerate().filter(|&(m, &c)| c && (m as u32) & !x == 0).count() % 2 == 1
}

pub fn gf2_rank(mut rows: Vec<u32>) -> usize {
    let mut rank = 0;
    for bit in (0..32).rev() {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && *r >> bit & 1 == 1 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

pub fn support(f: &BooleanFunction) -> Vec<u32> {
    walsh(f).iter().enumerate().filter(|(_, w)| **w != 0).map(|(u, _)| u as u32).collect()
}

/// Rank of `S - v` for any `v` in `S`.
pub fn support_rank(s: &[u32]) -> usize {
    match s.first() {
        Some(&v) => gf2_rank(s.iter().map(|&p| p ^ v).collect()),
        None => 0,
    }
}

/// Every `a` with `f(x) + f(x+a)` constant.
pub fn linear_structures(f: &BooleanFunction) -> Vec<u32> {
    let size = 1u32 << f.num_vars();
    (0..size).filter(|&a| (0..size).all(|x| f.get(x) ^ f.get(x ^ a) == f.get(0) ^ f.get(a))).collect()
}

pub fn hamming(a: &BooleanFunction, b: &BooleanFunction) -> u64 {
    (0..a.len() as u32).filter(|&x| a.get(x) != b.get(x)).count() as u64
}

/// First `u` (in index order) where `g` is not at bent distance to the column
/// `i -> u.omega_i` of the ordered support, with that distance.
pub fn first_profile_violation(points: &[BitVector], g: &BooleanFunction) -> Option<(u32, u64)> {
    let n = points[0].len();
    let m = g.num_vars();
    let (base, delta) = (1u64 << (m - 1), 1u64 << (m / 2 - 1));
    (0..1u32 << n).find_map(|u| {
        let phi = BooleanFunction::from_fn(m, |i| dot(u, points[i as usize].index())).unwrap();
        let d = hamming(g, &phi);
        (d != base + delta && d != base - delta).then_some((u, d))
    })
}

pub fn random_function<R: Rng>(n: usize, rng: &mut R) -> BooleanFunction {
    BooleanFunction::from_fn(n, |_| rng.gen()).unwrap()
}

pub fn random_vector<R: Rng>(n: usize, rng: &mut R) -> BitVector {
    BitVector::from_index(rng.gen_range(0..1u64 << n), n).unwrap()
}

pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> BinaryMatrix {
    loop {
        let rows: Vec<BitVector> = (0..n).map(|_| random_vector(n, rng)).collect();
        if gf2_rank(rows.iter().map(|r| r.index()).collect()) == n {
            return BinaryMatrix::from_rows(&rows).unwrap();
        }
    }
}

/// `x -> xA` for row vector `x`, written out bit by bit.
pub fn row_times(x: u32, a: &BinaryMatrix) -> u32 {
    let n = a.rows();
    (0..n).filter(|&r| x >> (n - 1 - r) & 1 == 1).fold(0, |acc, r| acc ^ a.row(r).index())
}

pub fn is_affine(f: &BooleanFunction) -> bool {
    let n = f.num_vars();
    let c = f.get(0);
    let lin: u32 = (0..n).filter(|&i| f.get(1 << i) != c).fold(0, |acc, i| acc | 1 << i);
    (0..f.len() as u32).all(|x| f.get(x) == c ^ dot(lin, x))
}

/// Exhaustive search for `h(x) = g(xA + b) + affine(x)`: every invertible
/// `A` and every `b`.
pub fn brute_force_ea(g: &BooleanFunction, h: &BooleanFunction) -> bool {
    let n = g.num_vars();
    assert!(n <= 4, "brute force is for tiny n");
    let size = 1u32 << n;
    let mut row_sets = vec![0u32; n];
    let total = (size as u64).pow(n as u32);
    (0..total).any(|code| {
        let mut c = code;
        for r in row_sets.iter_mut() {
            *r = (c % size as u64) as u32;
            c /= size as u64;
        }
        if gf2_rank(row_sets.clone()) != n {
            return false;
        }
        let rows: Vec<BitVector> = row_sets.iter().map(|&r| BitVector::from_index(r as u64, n).unwrap()).collect();
        let a = BinaryMatrix::from_rows(&rows).unwrap();
        (0..size).any(|b| {
            let diff = BooleanFunction::from_fn(n, |x| g.get(row_times(x, &a) ^ b) ^ h.get(x)).unwrap();
            is_affine(&diff)
        })
    })
}
