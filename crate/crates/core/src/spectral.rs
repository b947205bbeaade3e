//! Walsh-Hadamard and autocorrelation spectra, plateaued profiles, ordered
//! Walsh supports and duals.

use std::collections::HashSet;
use std::ops::{Add, Sub};

use crate::bits::{check_vars, parity, BinaryMatrix, BitVector};
use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};

/// In-place unnormalized butterfly transform, `buf.len()` a power of two.
pub fn fwht<T>(buf: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let len = buf.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for chunk in buf.chunks_exact_mut(2 * h) {
            let (lo, hi) = chunk.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn from_values(n: usize, values: Vec<i32>) -> Result<Self> {
        check_vars(n)?;
        if values.len() != 1 << n {
            return Err(Error::DimensionMismatch { expected: 1 << n, found: values.len() });
        }
        Ok(Self { n, values })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn at(&self, u: &BitVector) -> i32 {
        self.values[u.index() as usize]
    }

    /// Points with nonzero value, in lexicographic order.
    pub fn support(&self) -> Vec<BitVector> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0)
            .map(|(u, _)| BitVector::new(u as u32, self.n))
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|&&w| w != 0).count()
    }

    /// The profile if the values are exactly `{0, +-2^((n+s)/2)}` with
    /// `1 <= s < n`. Bent (no zero) and affine (`s = n`) spectra give `None`.
    pub fn plateaued_profile(&self) -> Option<PlateauedProfile> {
        let mut amplitude = None;
        let (mut plus, mut minus, mut zero) = (0u64, 0u64, 0u64);
        for &w in &self.values {
            match w {
                0 => zero += 1,
                _ => {
                    let a = w.unsigned_abs();
                    if *amplitude.get_or_insert(a) != a {
                        return None;
                    }
                    if w > 0 {
                        plus += 1;
                    } else {
                        minus += 1;
                    }
                }
            }
        }
        let amplitude = amplitude?;
        if zero == 0 || !amplitude.is_power_of_two() {
            return None;
        }
        let s = 2 * amplitude.trailing_zeros() as usize;
        if s <= self.n || s >= 2 * self.n {
            return None;
        }
        let s = s - self.n;
        Some(PlateauedProfile { s, amplitude, count_plus: plus, count_minus: minus, count_zero: zero })
    }
}

/// Walsh spectrum `W_f(u) = sum_x (-1)^{f(x) + u.x}` by the fast transform.
pub fn wht(f: &BooleanFunction) -> WalshSpectrum {
    let mut buf = f.signs();
    fwht(&mut buf);
    WalshSpectrum { n: f.num_vars(), values: buf }
}

/// Inverse transform with exact integer arithmetic. Fails with a witness
/// point when some reconstructed value is not `+-1`.
pub fn inverse_wht(spec: &WalshSpectrum) -> Result<BooleanFunction> {
    let n = spec.n;
    let mut buf: Vec<i64> = spec.values.iter().map(|&w| w as i64).collect();
    fwht(&mut buf);
    let scale = 1i64 << n;
    let mut f = BooleanFunction::zero(n)?;
    for (x, &v) in buf.iter().enumerate() {
        match v {
            v if v == scale => {}
            v if v == -scale => f.set(x as u32, true),
            value => return Err(Error::NotBooleanSpectrum { point: BitVector::new(x as u32, n), value }),
        }
    }
    Ok(f)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutocorrelationSpectrum {
    n: usize,
    values: Vec<i64>,
}

impl AutocorrelationSpectrum {
    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn at(&self, a: &BitVector) -> i64 {
        self.values[a.index() as usize]
    }

    /// `#{a : Delta_f(a) != 0}`.
    pub fn nonzero_count(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }
}

/// `Delta_f(a) = sum_x (-1)^{f(x) + f(x+a)}`, computed as the transform of
/// the squared spectrum divided by `2^n`.
pub fn autocorrelation(f: &BooleanFunction) -> AutocorrelationSpectrum {
    autocorrelation_from_spectrum(&wht(f))
}

pub fn autocorrelation_from_spectrum(spec: &WalshSpectrum) -> AutocorrelationSpectrum {
    let n = spec.n;
    let mut buf: Vec<i64> = spec.values.iter().map(|&w| (w as i64) * (w as i64)).collect();
    fwht(&mut buf);
    buf.iter_mut().for_each(|v| *v >>= n);
    AutocorrelationSpectrum { n, values: buf }
}

/// Autocorrelation at `a` from the support written as `v + E`:
/// `2^-n (-1)^{v.a} sum_{u in E} W(u+v)^2 (-1)^{u.a}`.
pub fn autocorrelation_at_via_support(spec: &WalshSpectrum, offset: &BitVector, a: &BitVector) -> i64 {
    let v = offset.index();
    let a = a.index();
    let sum: i64 = spec
        .values
        .iter()
        .enumerate()
        .filter(|(_, &w)| w != 0)
        .map(|(w_idx, &w)| {
            let e = w_idx as u32 ^ v;
            let sq = (w as i64) * (w as i64);
            if parity(e & a) {
                -sq
            } else {
                sq
            }
        })
        .sum();
    let sum = sum >> spec.n;
    if parity(v & a) {
        -sum
    } else {
        sum
    }
}

/// Value counts of an s-plateaued spectrum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PlateauedProfile {
    pub s: usize,
    pub amplitude: u32,
    pub count_plus: u64,
    pub count_minus: u64,
    pub count_zero: u64,
}

impl PlateauedProfile {
    /// Expected counts for an s-plateaued function on n variables with the
    /// given `f(0)`: `(plus, minus, zero)`.
    pub fn expected_counts(n: usize, s: usize, f0: bool) -> (u64, u64, u64) {
        let zero = (1u64 << n) - (1u64 << (n - s));
        let base = 1u64 << (n - s - 1);
        let delta = 1u64 << ((n - s) / 2 - 1);
        if f0 {
            (base - delta, base + delta, zero)
        } else {
            (base + delta, base - delta, zero)
        }
    }
}

pub fn plateaued_profile(f: &BooleanFunction) -> Option<PlateauedProfile> {
    wht(f).plateaued_profile()
}

pub fn is_bent(f: &BooleanFunction) -> bool {
    let n = f.num_vars();
    if n % 2 == 1 {
        return false;
    }
    let amp = 1i32 << (n / 2);
    wht(f).values.iter().all(|w| w.abs() == amp)
}

/// The dual `f*` with `W_f(u) = 2^{n/2} (-1)^{f*(u)}`.
pub fn bent_dual(f: &BooleanFunction) -> Result<BooleanFunction> {
    let n = f.num_vars();
    if n % 2 == 1 {
        return Err(Error::OddVariableCount(n));
    }
    let spec = wht(f);
    let amp = 1i32 << (n / 2);
    if let Some(u) = spec.values.iter().position(|w| w.abs() != amp) {
        return Err(Error::NotBent(BitVector::new(u as u32, n)));
    }
    BooleanFunction::from_fn(n, |u| spec.values[u as usize] < 0)
}

/// `S_f = {u : W_f(u) != 0}` in lexicographic order.
pub fn walsh_support(f: &BooleanFunction) -> Vec<BitVector> {
    wht(f).support()
}

/// How a support was ordered: `omega_i = v + e_i M` with `E` lexicographic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub offset: BitVector,
    pub elements: Vec<BitVector>,
    pub matrix: BinaryMatrix,
}

/// An ordered Walsh support `omega_0, ..., omega_{2^k - 1}`. The order is
/// what identifies the support with `F_2^k` when reading off a dual.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalshSupport {
    n: usize,
    points: Vec<BitVector>,
    decomposition: Option<Decomposition>,
}

impl WalshSupport {
    /// Takes the points in the given order.
    pub fn from_points(n: usize, points: Vec<BitVector>) -> Result<Self> {
        check_vars(n)?;
        if !points.len().is_power_of_two() {
            return Err(Error::Precondition(format!("support size {} is not a power of two", points.len())));
        }
        let mut seen = std::collections::HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.len() });
            }
            if let Some(j) = seen.insert(p.index(), i) {
                return Err(Error::DuplicateRow(j, i));
            }
        }
        Ok(Self { n, points, decomposition: None })
    }

    /// Orders `set` as `v + e_i M` with `E = (S + v) M^{-1}` sorted.
    pub fn ordered(n: usize, set: &[BitVector], offset: &BitVector, matrix: &BinaryMatrix) -> Result<Self> {
        let mut support = Self::from_points(n, set.to_vec())?;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: matrix.rows() });
        }
        if !set.contains(offset) {
            return Err(Error::PointNotInSupport(*offset));
        }
        let inv = matrix.inverse()?;
        let v = offset.index();
        let mut elements: Vec<u32> = set.iter().map(|p| inv.apply(p.index() ^ v)).collect();
        elements.sort_unstable();
        support.points = elements.iter().map(|&e| BitVector::new(v ^ matrix.apply(e), n)).collect();
        support.decomposition = Some(Decomposition {
            offset: *offset,
            elements: elements.iter().map(|&e| BitVector::new(e, n)).collect(),
            matrix: matrix.clone(),
        });
        Ok(support)
    }

    /// Canonical order: `v` the lexicographically smallest point, `M = I`.
    pub fn canonical(n: usize, set: &[BitVector]) -> Result<Self> {
        let v = *set.iter().min().ok_or(Error::Precondition("empty support".into()))?;
        Self::ordered(n, set, &v, &BinaryMatrix::identity(n))
    }

    /// Canonically ordered Walsh support of `f`.
    pub fn of(f: &BooleanFunction) -> Result<Self> {
        Self::canonical(f.num_vars(), &walsh_support(f))
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// `k` with `#S = 2^k`.
    pub fn dim(&self) -> usize {
        self.points.len().trailing_zeros() as usize
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[BitVector] {
        &self.points
    }

    pub(crate) fn packed(&self) -> impl Iterator<Item = u32> + '_ {
        self.points.iter().map(|p| p.index())
    }

    pub fn decomposition(&self) -> Option<&Decomposition> {
        self.decomposition.as_ref()
    }

    pub fn same_set(&self, other: &[BitVector]) -> bool {
        let a: HashSet<u32> = self.packed().collect();
        other.len() == a.len() && other.iter().all(|p| a.contains(&p.index()))
    }

    /// The support translated by `q`, keeping the order.
    pub fn shifted(&self, q: &BitVector) -> Self {
        Self {
            n: self.n,
            points: self.points.iter().map(|&p| p + *q).collect(),
            decomposition: None,
        }
    }

    /// Column `j` (1-based) as a function on `F_2^k`: `x_i -> (omega_i)_j`.
    pub fn column(&self, j: usize) -> Result<BooleanFunction> {
        self.sequence_profile_column(&BitVector::unit(j, self.n))
    }

    /// `phi_u(x_i) = u . omega_i`.
    pub fn sequence_profile_column(&self, u: &BitVector) -> Result<BooleanFunction> {
        if u.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: u.len() });
        }
        let u = u.index();
        BooleanFunction::from_fn(self.dim(), |i| parity(u & self.points[i as usize].index()))
    }
}

/// A dual read off an ordered support: `base(x_i) = 1` iff `W_f(omega_i) < 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualFunction {
    pub base: BooleanFunction,
    pub support: WalshSupport,
}

pub fn extract_dual(f: &BooleanFunction, support: &WalshSupport) -> Result<DualFunction> {
    let spec = wht(f);
    let profile = spec.plateaued_profile().ok_or(Error::FunctionNotPlateaued)?;
    if support.num_vars() != f.num_vars() || !support.same_set(&spec.support()) {
        return Err(Error::SupportMismatch);
    }
    debug_assert_eq!(support.dim(), f.num_vars() - profile.s);
    let base = BooleanFunction::from_fn(support.dim(), |i| spec.at(&support.points[i as usize]) < 0)?;
    Ok(DualFunction { base, support: support.clone() })
}

/// Whether `|sum (-1)^{g + phi}| = 2^{m/2}`, i.e. the two functions are at
/// distance `2^{m-1} +- 2^{m/2-1}`.
pub fn bent_distance_ok(g: &BooleanFunction, phi: &BooleanFunction) -> Result<bool> {
    let m = g.num_vars();
    if m % 2 == 1 {
        return Err(Error::OddVariableCount(m));
    }
    Ok(g.correlation(phi)?.unsigned_abs() == 1 << (m / 2))
}
