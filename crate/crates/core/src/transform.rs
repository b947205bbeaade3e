//! The Hou-Langevin nonlinear input permutation and the functions it
//! produces from a decomposition `f = x_i f1 + x_j f2 + x_i x_j alpha + g`.

use rayon::prelude::*;

use crate::bits::{check_vars, parity};
use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::spectral::wht;

/// A map `F_2^n -> F_2^n` stored as its table of images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorialMap {
    n: usize,
    images: Vec<u32>,
}

impl VectorialMap {
    pub fn identity(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self { n, images: (0..1u32 << n).collect() })
    }

    pub fn from_images(n: usize, images: Vec<u32>) -> Result<Self> {
        check_vars(n)?;
        if images.len() != 1 << n {
            return Err(Error::DimensionMismatch { expected: 1 << n, found: images.len() });
        }
        if let Some(&y) = images.iter().find(|&&y| y >> n != 0) {
            return Err(Error::IndexOutOfRange { index: y as u64, n });
        }
        Ok(Self { n, images })
    }

    /// The map `x -> (c_1(x), ..., c_n(x))`.
    pub fn from_coordinates(coords: &[BooleanFunction]) -> Result<Self> {
        let n = coords.len();
        check_vars(n)?;
        if let Some(c) = coords.iter().find(|c| c.num_vars() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: c.num_vars() });
        }
        let images = (0..1u32 << n).map(|x| coords.iter().fold(0, |acc, c| (acc << 1) | c.get(x) as u32)).collect();
        Ok(Self { n, images })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// Coordinate function `i` (1-based).
    pub fn coordinate(&self, i: usize) -> Result<BooleanFunction> {
        if !(1..=self.n).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i as u64, n: self.n });
        }
        BooleanFunction::from_fn(self.n, |x| (self.images[x as usize] >> (self.n - i)) & 1 == 1)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_bijective() {
            return Err(Error::NotBijective("map has repeated images".into()));
        }
        let mut inv = vec![0; self.images.len()];
        self.images.iter().enumerate().for_each(|(x, &y)| inv[y as usize] = x as u32);
        Ok(Self { n: self.n, images: inv })
    }

    /// `self ∘ other`, i.e. `x -> self(other(x))`.
    pub fn after(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(Self { n: self.n, images: other.images.iter().map(|&y| self.images[y as usize]).collect() })
    }
}

/// `f(P(x))`, defined pointwise whether or not `P` is a permutation.
pub fn compose(f: &BooleanFunction, p: &VectorialMap) -> Result<BooleanFunction> {
    if f.num_vars() != p.n {
        return Err(Error::DimensionMismatch { expected: f.num_vars(), found: p.n });
    }
    BooleanFunction::from_fn(p.n, |x| f.get(p.images[x as usize]))
}

/// `f = x_i f1 + x_j f2 + x_i x_j alpha + g` with `f1, f2, alpha, g` not
/// depending on `x_i, x_j` and `alpha` affine. All parts are kept as
/// functions on the full `n` variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form27Decomposition {
    pub i: usize,
    pub j: usize,
    pub f1: BooleanFunction,
    pub f2: BooleanFunction,
    pub alpha: BooleanFunction,
    pub g: BooleanFunction,
}

impl Form27Decomposition {
    pub fn num_vars(&self) -> usize {
        self.g.num_vars()
    }

    fn bits(&self) -> (u32, u32) {
        let n = self.num_vars();
        (1 << (n - self.i), 1 << (n - self.j))
    }

    pub fn reassemble(&self) -> BooleanFunction {
        let (bi, bj) = self.bits();
        BooleanFunction::from_fn(self.num_vars(), |x| {
            let (xi, xj) = (x & bi != 0, x & bj != 0);
            (xi && self.f1.get(x)) ^ (xj && self.f2.get(x)) ^ (xi && xj && self.alpha.get(x)) ^ self.g.get(x)
        })
        .expect("same n as the parts")
    }
}

/// Splits `f` at pivot variables `x_i, x_j` (1-based).
pub fn decompose_form27(f: &BooleanFunction, i: usize, j: usize) -> Result<Form27Decomposition> {
    let n = f.num_vars();
    if i == j || !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::Precondition(format!("pivots ({i}, {j}) must be distinct in 1..={n}")));
    }
    let (bi, bj) = (1u32 << (n - i), 1u32 << (n - j));
    let at = |x: u32, a: bool, b: bool| {
        let x = x & !(bi | bj);
        f.get(x | if a { bi } else { 0 } | if b { bj } else { 0 })
    };
    let g = BooleanFunction::from_fn(n, |x| at(x, false, false))?;
    let f1 = BooleanFunction::from_fn(n, |x| at(x, true, false) ^ at(x, false, false))?;
    let f2 = BooleanFunction::from_fn(n, |x| at(x, false, true) ^ at(x, false, false))?;
    let alpha = BooleanFunction::from_fn(n, |x| {
        at(x, true, true) ^ at(x, true, false) ^ at(x, false, true) ^ at(x, false, false)
    })?;
    let deg = alpha.degree();
    if deg > 1 {
        return Err(Error::AlphaNotAffine(deg));
    }
    Ok(Form27Decomposition { i, j, f1, f2, alpha, g })
}

/// `(x_i, x_j) -> (f1 + x_i + x_j alpha, f2 + x_i (alpha + 1) + x_j)`,
/// other coordinates fixed.
pub fn sigma_permutation(d: &Form27Decomposition) -> VectorialMap {
    let (bi, bj) = d.bits();
    let images = (0..1u32 << d.num_vars())
        .map(|x| {
            let (xi, xj, a) = (x & bi != 0, x & bj != 0, d.alpha.get(x));
            let yi = d.f1.get(x) ^ xi ^ (xj && a);
            let yj = d.f2.get(x) ^ (xi && !a) ^ xj;
            (x & !(bi | bj)) | if yi { bi } else { 0 } | if yj { bj } else { 0 }
        })
        .collect();
    VectorialMap { n: d.num_vars(), images }
}

/// The inverse of [`sigma_permutation`]:
/// `(x_i, x_j) -> (a + b alpha, a (alpha + 1) + b)` with
/// `a = x_i + f1`, `b = x_j + f2`.
pub fn tau_permutation(d: &Form27Decomposition) -> VectorialMap {
    let (bi, bj) = d.bits();
    let images = (0..1u32 << d.num_vars())
        .map(|x| {
            let al = d.alpha.get(x);
            let a = (x & bi != 0) ^ d.f1.get(x);
            let b = (x & bj != 0) ^ d.f2.get(x);
            let yi = a ^ (b && al);
            let yj = (a && !al) ^ b;
            (x & !(bi | bj)) | if yi { bi } else { 0 } | if yj { bj } else { 0 }
        })
        .collect();
    VectorialMap { n: d.num_vars(), images }
}

/// Common absolute value of the nonzero Walsh coefficients, if there is one.
fn plateau_amplitude(f: &BooleanFunction) -> Option<u32> {
    let spec = wht(f);
    let mut amp = None;
    for w in spec.values().iter().filter(|&&w| w != 0) {
        if *amp.get_or_insert(w.unsigned_abs()) != w.unsigned_abs() {
            return None;
        }
    }
    amp
}

/// `F = (alpha+1) f1 f2 + (x_i+1) f1 + (x_i+x_j+alpha+1) f2 + alpha (x_i+1) x_j + g`,
/// which equals `f ∘ tau`. The source must be plateaued (bent included).
pub fn hou_langevin_transform(d: &Form27Decomposition) -> Result<BooleanFunction> {
    plateau_amplitude(&d.reassemble()).ok_or(Error::FunctionNotPlateaued)?;
    let (bi, bj) = d.bits();
    BooleanFunction::from_fn(d.num_vars(), |x| {
        let (xi, xj) = (x & bi != 0, x & bj != 0);
        let (f1, f2, a, g) = (d.f1.get(x), d.f2.get(x), d.alpha.get(x), d.g.get(x));
        (!a && f1 && f2) ^ (!xi && f1) ^ ((xi ^ xj ^ a ^ true) && f2) ^ (a && !xi && xj) ^ g
    })
}

fn lp_check(amp: u32, f: &BooleanFunction, g: &BooleanFunction) -> Result<bool> {
    Ok(wht(&f.xor(g)?).values().iter().all(|&w| w == 0 || w.unsigned_abs() == amp))
}

/// Whether `W_{f+g}` takes only the values `{0, +-A}` where `A` is the
/// amplitude of the plateaued function `f`.
pub fn lp_membership(f: &BooleanFunction, g: &BooleanFunction) -> Result<bool> {
    let amp = plateau_amplitude(f).ok_or(Error::FunctionNotPlateaued)?;
    lp_check(amp, f, g)
}

/// Whether every linear combination `u . sigma` of the coordinates lies in
/// `lp(f)`.
pub fn span_subset_lp(f: &BooleanFunction, sigma: &VectorialMap) -> Result<bool> {
    let amp = plateau_amplitude(f).ok_or(Error::FunctionNotPlateaued)?;
    let n = f.num_vars();
    if sigma.n != n {
        return Err(Error::DimensionMismatch { expected: n, found: sigma.n });
    }
    (0..1u32 << n)
        .into_par_iter()
        .map(|u| {
            let l = BooleanFunction::from_fn(n, |x| parity(u & sigma.images[x as usize]))?;
            lp_check(amp, f, &l)
        })
        .try_reduce(|| true, |a, b| Ok(a && b))
}
