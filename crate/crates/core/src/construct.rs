//! Plateaued functions from a prescribed spectrum, and the support recipes
//! that make a bent dual land at bent distance to every profile column.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::{check_vars, parity, span, BinaryMatrix, BitVector, Echelon};
use crate::boolfn::BooleanFunction;
use crate::classify::is_affine_subspace;
use crate::error::{Error, Result};
use crate::spectral::{inverse_wht, is_bent, wht, WalshSpectrum, WalshSupport};

/// An ordered support together with the dual to place on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralSpec {
    pub support: WalshSupport,
    pub dual: BooleanFunction,
}

impl SpectralSpec {
    pub fn new(support: WalshSupport, dual: BooleanFunction) -> Result<Self> {
        let m = support.dim();
        if dual.num_vars() != m {
            return Err(Error::DimensionMismatch { expected: m, found: dual.num_vars() });
        }
        if m % 2 == 1 {
            return Err(Error::OddVariableCount(m));
        }
        let (base, delta) = (1u64 << (m - 1), 1u64 << (m / 2 - 1));
        let w = dual.weight();
        if w != base + delta && w != base - delta {
            return Err(Error::DualWeight { weight: w, m });
        }
        Ok(Self { support, dual })
    }

    pub fn num_vars(&self) -> usize {
        self.support.num_vars()
    }

    pub fn s(&self) -> usize {
        self.support.num_vars() - self.support.dim()
    }

    /// `2^{(n+s)/2}`.
    pub fn amplitude(&self) -> i32 {
        1 << ((self.num_vars() + self.s()) / 2)
    }

    pub fn spectrum(&self) -> WalshSpectrum {
        let n = self.num_vars();
        let amp = self.amplitude();
        let mut values = vec![0i32; 1 << n];
        for (i, p) in self.support.points().iter().enumerate() {
            values[p.index() as usize] = if self.dual.get(i as u32) { -amp } else { amp };
        }
        WalshSpectrum::from_values(n, values).expect("support has the declared size")
    }
}

/// Inverts the prescribed spectrum. The inverse transform at `u` equals the
/// amplitude times the correlation of the dual with the profile column
/// `phi_u`, so a failure names the first `u` whose column is not at bent
/// distance, together with that distance.
pub fn build_from_spectrum(spec: &SpectralSpec) -> Result<BooleanFunction> {
    let amp = spec.amplitude() as i64;
    let m = spec.support.dim();
    inverse_wht(&spec.spectrum()).map_err(|e| match e {
        Error::NotBooleanSpectrum { point, value } => {
            let corr = value / amp;
            Error::NotPlateaued { point, distance: (((1i64 << m) - corr) / 2) as u64 }
        }
        e => e,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProfileCheck {
    Ok,
    Violated { u: BitVector, distance: u64 },
}

/// Checks `g` against every column `phi_u` of the sequence profile, in
/// lexicographic order of `u`.
pub fn bent_distance_to_profile(support: &WalshSupport, g: &BooleanFunction) -> Result<ProfileCheck> {
    let n = support.num_vars();
    let m = support.dim();
    if g.num_vars() != m {
        return Err(Error::DimensionMismatch { expected: m, found: g.num_vars() });
    }
    if m % 2 == 1 {
        return Err(Error::OddVariableCount(m));
    }
    let half = 1u64 << (m / 2 - 1);
    let centre = 1u64 << (m - 1);
    for u in 0..1u32 << n {
        let u = BitVector::new(u, n);
        let d = g.hamming_distance(&support.sequence_profile_column(&u)?)?;
        if d != centre + half && d != centre - half {
            return Ok(ProfileCheck::Violated { u, distance: d });
        }
    }
    Ok(ProfileCheck::Ok)
}

/// Support whose row `i` is `(col_1(x_i), ..., col_n(x_i))`.
pub fn support_from_columns(cols: &[BooleanFunction]) -> Result<WalshSupport> {
    let first = cols.first().ok_or_else(|| Error::Precondition("no columns".into()))?;
    let m = first.num_vars();
    let n = cols.len();
    check_vars(n)?;
    if let Some(c) = cols.iter().find(|c| c.num_vars() != m) {
        return Err(Error::DimensionMismatch { expected: m, found: c.num_vars() });
    }
    let points = (0..1u32 << m)
        .map(|x| BitVector::new(cols.iter().fold(0, |acc, c| (acc << 1) | c.get(x) as u32), n))
        .collect();
    WalshSupport::from_points(n, points)
}

/// Columns of `c + E M` with `E = F_2^k` in lexicographic order.
fn affine_columns(c: &BitVector, m: &BinaryMatrix) -> Result<Vec<BooleanFunction>> {
    let k = c.len();
    if m.rows() != k || m.cols() != k {
        return Err(Error::DimensionMismatch { expected: k, found: m.rows() });
    }
    if !m.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let rows: Vec<u32> = (0..1u32 << k).map(|x| c.index() ^ m.apply(x)).collect();
    (1..=k).map(|j| BooleanFunction::from_fn(k, |x| (rows[x as usize] >> (k - j)) & 1 == 1)).collect()
}

fn check_permutation(psi: &[u32]) -> Result<usize> {
    if !psi.len().is_power_of_two() || psi.len() < 2 {
        return Err(Error::NotBijective(format!("{} entries is not 2^k with k >= 1", psi.len())));
    }
    let mut seen = vec![false; psi.len()];
    for (y, &p) in psi.iter().enumerate() {
        match seen.get_mut(p as usize) {
            None => return Err(Error::NotBijective(format!("image {p} of {y} out of range"))),
            Some(true) => return Err(Error::NotBijective(format!("image {p} repeated at {y}"))),
            Some(s) => *s = true,
        }
    }
    Ok(psi.len().trailing_zeros() as usize)
}

/// `g(x, y) = x . psi(y) + t(y)` with `x` the first `k` variables.
pub fn mm_bent(psi: &[u32], t: &BooleanFunction) -> Result<BooleanFunction> {
    let k = check_permutation(psi)?;
    if t.num_vars() != k {
        return Err(Error::DimensionMismatch { expected: k, found: t.num_vars() });
    }
    let low = (1u32 << k) - 1;
    BooleanFunction::from_fn(2 * k, |z| {
        let (x, y) = (z >> k, z & low);
        parity(x & psi[y as usize]) ^ t.get(y)
    })
}

/// One member of a Maiorana-McFarland plateaued family: the images of
/// `phi_i` on `F_2^k` (packed, in `F_2^s`) and the function `g_i` of `y`.
#[derive(Clone, Debug)]
pub struct MmMember {
    pub phi: Vec<u32>,
    pub g: BooleanFunction,
}

/// `f_i(y, x) = phi_i(y) . x + g_i(y)` with `y` the first `k` variables and
/// `x` the last `s`. Members have pairwise disjoint spectra; each is
/// `(s - k)`-plateaued on `k + s` variables.
pub fn mm_plateaued_family(k: usize, s: usize, members: &[MmMember]) -> Result<Vec<BooleanFunction>> {
    if s <= k {
        return Err(Error::Precondition(format!("need s > k, got s = {s}, k = {k}")));
    }
    check_vars(k + s)?;
    let mut used = HashSet::new();
    let mut out = Vec::with_capacity(members.len());
    for member in members {
        if member.phi.len() != 1 << k {
            return Err(Error::DimensionMismatch { expected: 1 << k, found: member.phi.len() });
        }
        if member.g.num_vars() != k {
            return Err(Error::DimensionMismatch { expected: k, found: member.g.num_vars() });
        }
        let mut own = HashSet::new();
        for &p in &member.phi {
            if p >> s != 0 {
                return Err(Error::DimensionMismatch { expected: s, found: 32 - p.leading_zeros() as usize });
            }
            if !own.insert(p) {
                return Err(Error::NotBijective(format!("phi repeats {}", BitVector::new(p, s))));
            }
            if !used.insert(p) {
                return Err(Error::Overlap(BitVector::new(p, s)));
            }
        }
        let low = (1u32 << s) - 1;
        out.push(BooleanFunction::from_fn(k + s, |z| {
            let (y, x) = (z >> s, z & low);
            parity(member.phi[y as usize] & x) ^ member.g.get(y)
        })?);
    }
    Ok(out)
}

/// A function built on an explicit support, with the spec it came from.
#[derive(Clone, Debug)]
pub struct Construction {
    pub function: BooleanFunction,
    pub spec: SpectralSpec,
}

impl Construction {
    fn build(columns: Vec<BooleanFunction>, dual: BooleanFunction) -> Result<Self> {
        let spec = SpectralSpec::new(support_from_columns(&columns)?, dual)?;
        let function = build_from_spectrum(&spec)?;
        debug_assert!(spec.s() == 0 || wht(&function).plateaued_profile().map(|p| p.s) == Some(spec.s()));
        Ok(Self { function, spec })
    }
}

/// Parameters of the MM-dual construction with support
/// `(c + E M) ≀ T_{t_1} ≀ ... ≀ T_{t_s}`.
#[derive(Clone, Debug)]
pub struct Thm41 {
    /// Permutation of `F_2^k` for the dual `x . psi(y) + t(y)`.
    pub psi: Vec<u32>,
    pub t: BooleanFunction,
    pub c: BitVector,
    pub m: BinaryMatrix,
    /// Extra columns, each a function of `y` alone: either on `k` variables
    /// or on `2k` variables not depending on `x`.
    pub columns: Vec<BooleanFunction>,
}

impl Thm41 {
    /// Random parameters on `n = 2k + s` variables.
    pub fn random<R: Rng + ?Sized>(k: usize, s: usize, rng: &mut R) -> Self {
        let mut psi: Vec<u32> = (0..1u32 << k).collect();
        psi.shuffle(rng);
        let rand_fn = |rng: &mut R| BooleanFunction::from_fn(k, |_| rng.gen()).expect("k >= 1");
        Self {
            psi,
            t: rand_fn(rng),
            c: BitVector::new(rng.gen(), 2 * k),
            m: BinaryMatrix::random_invertible_with(2 * k, rng),
            columns: (0..s).map(|_| rand_fn(rng)).collect(),
        }
    }

    pub fn construct(&self) -> Result<Construction> {
        let dual = mm_bent(&self.psi, &self.t)?;
        let k = dual.num_vars() / 2;
        if self.c.len() != 2 * k {
            return Err(Error::DimensionMismatch { expected: 2 * k, found: self.c.len() });
        }
        let mut columns = affine_columns(&self.c, &self.m)?;
        let low = (1u32 << k) - 1;
        for (j, t) in self.columns.iter().enumerate() {
            let lifted = match t.num_vars() {
                n if n == k => BooleanFunction::from_fn(2 * k, |z| t.get(z & low))?,
                n if n == 2 * k => {
                    if let Some(i) = (1..=k).find(|&i| !t.independent_of(i)) {
                        return Err(Error::Condition(format!("column t_{} depends on x{i}", j + 1)));
                    }
                    t.clone()
                }
                n => return Err(Error::DimensionMismatch { expected: k, found: n }),
            };
            columns.push(lifted);
        }
        Construction::build(columns, dual)
    }
}

/// Indicator of the span of `basis` in `F_2^m`.
pub fn subspace_indicator(basis: &[BitVector], m: usize) -> Result<BooleanFunction> {
    let mut ech = Echelon::new();
    for b in basis {
        if b.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: b.len() });
        }
        if !ech.insert(b.index()) {
            return Err(Error::DependentBasis);
        }
    }
    BooleanFunction::from_fn(m, |x| ech.contains(x))
}

fn span_points(basis: &[BitVector]) -> Vec<u32> {
    let b: Vec<u32> = basis.iter().map(|v| v.index()).collect();
    let mut pts = span(&b);
    pts.sort_unstable();
    pts
}

/// `{z : z . e = 0 for all e in span(basis)}`, sorted.
fn orthogonal(basis: &[BitVector], k: usize) -> Vec<u32> {
    (0..1u32 << k).filter(|&z| basis.iter().all(|e| !parity(z & e.index()))).collect()
}

/// Which class supplies the nonlinear column of the semi-bent support.
#[derive(Clone, Debug)]
pub enum Thm42Variant {
    /// `mu(x, y) = 1_{E1}(x) 1_{E2}(y)`, needs `psi(E2) = E1^perp`.
    D { e1: Vec<BitVector>, e2: Vec<BitVector> },
    /// `mu(x, y) = 1_L(x)`, needs every `psi^{-1}(v + L^perp)` affine.
    C { l: Vec<BitVector> },
}

/// Semi-bent function on `2k + 1` variables with dual `x . psi(y)` and
/// support `(c + E M) ≀ T_mu`.
pub fn construct_thm42(psi: &[u32], variant: &Thm42Variant, c: &BitVector, m: &BinaryMatrix) -> Result<Construction> {
    let k = check_permutation(psi)?;
    let low = (1u32 << k) - 1;
    let mu = match variant {
        Thm42Variant::D { e1, e2 } => {
            let ind1 = subspace_indicator(e1, k)?;
            let ind2 = subspace_indicator(e2, k)?;
            let mut image: Vec<u32> = span_points(e2).iter().map(|&y| psi[y as usize]).collect();
            image.sort_unstable();
            if image != orthogonal(e1, k) {
                return Err(Error::Condition("psi(E2) differs from the orthogonal complement of E1".into()));
            }
            BooleanFunction::from_fn(2 * k, |z| ind1.get(z >> k) && ind2.get(z & low))?
        }
        Thm42Variant::C { l } => {
            let ind = subspace_indicator(l, k)?;
            let lperp = orthogonal(l, k);
            let mut inv = vec![0u32; psi.len()];
            psi.iter().enumerate().for_each(|(y, &p)| inv[p as usize] = y as u32);
            for v in 0..1u32 << k {
                let pre: Vec<BitVector> = lperp.iter().map(|&z| BitVector::new(inv[(v ^ z) as usize], k)).collect();
                if is_affine_subspace(&pre).is_none() {
                    return Err(Error::Condition(format!(
                        "preimage of {} + L^perp is not affine",
                        BitVector::new(v, k)
                    )));
                }
            }
            BooleanFunction::from_fn(2 * k, |z| ind.get(z >> k))?
        }
    };
    let dual = mm_bent(psi, &BooleanFunction::zero(k)?)?;
    if c.len() != 2 * k {
        return Err(Error::DimensionMismatch { expected: 2 * k, found: c.len() });
    }
    let mut columns = affine_columns(c, m)?;
    columns.push(mu);
    Construction::build(columns, dual)
}

/// Irreducible polynomials defining `GF(2^k)`, indexed by `k`.
const GF_POLYS: [u32; 13] = [
    0, 0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011, 0b100011011, 0b1000010001, 0b10000001001,
    0b100000000101, 0b1000001010011,
];

/// `H = (h_1, ..., h_lambda)` with every nonzero combination bent.
#[derive(Clone, Debug)]
pub struct VectorialBent {
    m: usize,
    components: Vec<BooleanFunction>,
}

impl VectorialBent {
    pub fn new(components: Vec<BooleanFunction>) -> Result<Self> {
        let m = components.first().ok_or_else(|| Error::Precondition("no components".into()))?.num_vars();
        if m % 2 == 1 {
            return Err(Error::OddVariableCount(m));
        }
        if components.len() > m / 2 {
            return Err(Error::Precondition(format!("{} components exceed m/2 = {}", components.len(), m / 2)));
        }
        if let Some(c) = components.iter().find(|c| c.num_vars() != m) {
            return Err(Error::DimensionMismatch { expected: m, found: c.num_vars() });
        }
        for mask in 1u32..1 << components.len() {
            let mut comb = BooleanFunction::zero(m)?;
            for (j, h) in components.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    comb = comb.xor(h)?;
                }
            }
            if !is_bent(&comb) {
                return Err(Error::Condition(format!("component combination {mask:b} is not bent")));
            }
        }
        Ok(Self { m, components })
    }

    /// Maiorana-McFarland vectorial bent map on `2k` variables whose
    /// component `j` is `x . (z^j psi(y))`, multiplication in `GF(2^k)`.
    pub fn mm(psi: &[u32], lambda: usize) -> Result<Self> {
        let k = check_permutation(psi)?;
        let poly = *GF_POLYS.get(k).ok_or(Error::VariableCount(2 * k))?;
        let times_z = |y: u32| {
            let y = y << 1;
            if y >> k & 1 == 1 {
                y ^ poly
            } else {
                y
            }
        };
        let low = (1u32 << k) - 1;
        let comps = (0..lambda)
            .map(|j| {
                BooleanFunction::from_fn(2 * k, |z| {
                    let img = (0..j).fold(psi[(z & low) as usize], |acc, _| times_z(acc));
                    parity((z >> k) & img)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    pub fn components(&self) -> &[BooleanFunction] {
        &self.components
    }
}

/// Dual `h_i` on the support `(c + E M) ≀ T_{t_1} ≀ ... ≀ T_{h_{j_1}} ≀ ...`
/// with affine `t`'s and component columns `j` distinct and different
/// from `i` (all indices 1-based).
pub fn construct_thm43(
    h: &VectorialBent,
    i: usize,
    affine: &[BooleanFunction],
    columns: &[usize],
    c: &BitVector,
    m: &BinaryMatrix,
) -> Result<Construction> {
    let lambda = h.components.len();
    if !(1..=lambda).contains(&i) {
        return Err(Error::Precondition(format!("dual index {i} outside 1..={lambda}")));
    }
    let mut seen = HashSet::new();
    for &j in columns {
        if j == i || !(1..=lambda).contains(&j) || !seen.insert(j) {
            return Err(Error::Condition(format!("column component {j} must be distinct, in range and not {i}")));
        }
    }
    let mut cols = affine_columns(c, m)?;
    for t in affine {
        if t.num_vars() != h.m {
            return Err(Error::DimensionMismatch { expected: h.m, found: t.num_vars() });
        }
        if t.degree() > 1 {
            return Err(Error::Condition(format!("column of degree {} is not affine", t.degree())));
        }
        cols.push(t.clone());
    }
    cols.extend(columns.iter().map(|&j| h.components[j - 1].clone()));
    Construction::build(cols, h.components[i - 1].clone())
}

/// `Q = {c . (b_{n-s+1}, ..., b_n)}`: vectors supported on the last `s`
/// coordinates, in lexicographic order.
pub fn q_partition(n: usize, s: usize) -> Vec<BitVector> {
    (0..1u32 << s).map(|c| BitVector::new(c, n)).collect()
}

/// `2^s` functions whose Walsh supports partition `F_2^n`; member `i` has
/// support `base + q_i`.
#[derive(Clone, Debug)]
pub struct PlateauedFamily {
    pub n: usize,
    pub s: usize,
    pub members: Vec<BooleanFunction>,
    pub shifts: Vec<BitVector>,
    pub base_support: WalshSupport,
}

fn check_partition(n: usize, supports: impl Iterator<Item = Vec<BitVector>>) -> Result<()> {
    let mut seen = vec![false; 1 << n];
    let mut total = 0;
    for set in supports {
        for p in set {
            if std::mem::replace(&mut seen[p.index() as usize], true) {
                return Err(Error::Overlap(p));
            }
            total += 1;
        }
    }
    if total != 1 << n {
        return Err(Error::InvalidFamily(format!("supports cover {total} of {} points", 1u64 << n)));
    }
    Ok(())
}

impl PlateauedFamily {
    /// Recomputes every support and checks that member `i` has support
    /// `S_0 + q_i` and that together they partition the space.
    pub fn from_members(members: Vec<BooleanFunction>) -> Result<Self> {
        let first = members.first().ok_or_else(|| Error::InvalidFamily("no members".into()))?;
        let n = first.num_vars();
        if !members.len().is_power_of_two() {
            return Err(Error::InvalidFamily(format!("{} members is not a power of two", members.len())));
        }
        let s = members.len().trailing_zeros() as usize;
        let supports: Vec<Vec<BitVector>> = members
            .iter()
            .map(|f| {
                if f.num_vars() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: f.num_vars() });
                }
                Ok(wht(f).support())
            })
            .collect::<Result<_>>()?;
        let shifts = q_partition(n, s);
        let base = WalshSupport::canonical(n, &supports[0])?;
        for (i, (set, q)) in supports.iter().zip(&shifts).enumerate() {
            let expect: Vec<BitVector> = base.points().iter().map(|&p| p + *q).collect();
            let mut expect_sorted = expect;
            expect_sorted.sort_unstable();
            if *set != expect_sorted {
                return Err(Error::InvalidFamily(format!("member {i} support is not S_0 + {q}")));
            }
        }
        check_partition(n, supports.into_iter())?;
        Ok(Self { n, s, members, shifts, base_support: base })
    }
}

/// Builds member `i` on `base + q_i` with dual `duals[i]`.
pub fn disjoint_family(base: &WalshSupport, duals: &[BooleanFunction]) -> Result<PlateauedFamily> {
    let n = base.num_vars();
    let s = n - base.dim();
    if duals.len() != 1 << s {
        return Err(Error::InvalidFamily(format!("need {} duals, got {}", 1u64 << s, duals.len())));
    }
    let head = |p: &BitVector| p.index() >> s;
    let heads: HashSet<u32> = base.points().iter().map(head).collect();
    if heads.len() != base.len() {
        return Err(Error::InvalidFamily("first n - s coordinates of the base support repeat".into()));
    }
    let shifts = q_partition(n, s);
    check_partition(n, shifts.iter().map(|q| base.points().iter().map(|&p| p + *q).collect()))?;
    let members = shifts
        .par_iter()
        .zip(duals.par_iter())
        .enumerate()
        .map(|(i, (q, g))| {
            let spec = SpectralSpec::new(base.shifted(q), g.clone())
                .map_err(|e| Error::InvalidFamily(format!("member {i}: {e}")))?;
            build_from_spectrum(&spec).map_err(|e| Error::InvalidFamily(format!("member {i}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlateauedFamily { n, s, members, shifts, base_support: base.clone() })
}

/// Concatenation with member `i` on the coset `a_i + V`, `a_i` the high
/// bits; rejected with a witness if the result is not bent.
pub fn concat_bent(family: &PlateauedFamily) -> Result<BooleanFunction> {
    if family.members.len() != 1 << family.s {
        return Err(Error::InvalidFamily(format!("{} members for s = {}", family.members.len(), family.s)));
    }
    let f = BooleanFunction::concat(&family.members)?;
    let m = f.num_vars();
    if m % 2 == 1 {
        return Err(Error::OddVariableCount(m));
    }
    let amp = 1i32 << (m / 2);
    match wht(&f).values().iter().position(|w| w.abs() != amp) {
        Some(u) => Err(Error::NotBent(BitVector::new(u as u32, m))),
        None => Ok(f),
    }
}

/// Result of a dual search over one support.
#[derive(Clone, Debug)]
pub struct DualSearch {
    pub count: u64,
    pub examined: u64,
    pub exhaustive: bool,
    pub duals: Vec<BooleanFunction>,
}

/// Candidate index to function: bit `2^m - 1 - x` of the index is `g(x)`, so
/// indices sort like hex tables.
fn candidate(m: usize, idx: u64) -> BooleanFunction {
    let len = 1u32 << m;
    BooleanFunction::from_fn(m, |x| (idx >> (len - 1 - x)) & 1 == 1).expect("m >= 1")
}

/// Duals on `support` passing the bent-distance test against every profile
/// column. Exhaustive for `m <= 4`; for larger `m` draws `budget` random
/// functions of admissible weight from a seeded generator.
pub fn search_duals(support: &WalshSupport, budget: Option<u64>, seed: u64) -> Result<DualSearch> {
    let n = support.num_vars();
    let m = support.dim();
    if m % 2 == 1 || m == 0 {
        return Err(Error::OddVariableCount(m));
    }
    let columns: Vec<BooleanFunction> = {
        let mut seen = HashSet::new();
        (0..1u32 << n)
            .map(|u| support.sequence_profile_column(&BitVector::new(u, n)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|c| seen.insert(c.clone()))
            .collect()
    };
    let amp = 1i64 << (m / 2);
    let (base, delta) = (1u64 << (m - 1), 1u64 << (m / 2 - 1));
    let ok = |g: &BooleanFunction| {
        let w = g.weight();
        (w == base + delta || w == base - delta)
            && columns.iter().all(|c| g.correlation(c).map(|r| r.abs() == amp).unwrap_or(false))
    };
    if m <= 4 {
        let total = 1u64 << (1u64 << m);
        let duals: Vec<BooleanFunction> =
            (0..total).into_par_iter().map(|i| candidate(m, i)).filter(|g| ok(g)).collect();
        return Ok(DualSearch { count: duals.len() as u64, examined: total, exhaustive: true, duals });
    }
    let budget = budget.ok_or_else(|| {
        Error::Precondition(format!("exhaustive search over 2^{} functions is infeasible; give a budget", 1u64 << m))
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = HashSet::new();
    let mut duals = Vec::new();
    let mut positions: Vec<u32> = (0..1u32 << m).collect();
    for _ in 0..budget {
        let w = if rng.gen() { base + delta } else { base - delta };
        positions.shuffle(&mut rng);
        let mut g = BooleanFunction::zero(m)?;
        positions[..w as usize].iter().for_each(|&x| g.set(x, true));
        if ok(&g) && found.insert(g.clone()) {
            duals.push(g);
        }
    }
    duals.sort_by_key(|g| g.to_hex());
    Ok(DualSearch { count: duals.len() as u64, examined: budget, exhaustive: false, duals })
}
