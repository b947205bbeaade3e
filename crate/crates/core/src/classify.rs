//! Classification by Walsh support: trivial or nontrivial plateaued
//! functions, linear structures, EA-invariants and a small-n equivalence
//! search.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::bits::{independent_subset, parity, rank_of, span, BinaryMatrix, BitVector, Echelon};
use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::spectral::{autocorrelation_from_spectrum, wht, WalshSpectrum};

/// `offset + span(basis)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSubspace {
    pub offset: BitVector,
    pub basis: Vec<BitVector>,
}

impl AffineSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn points(&self) -> Vec<BitVector> {
        let n = self.offset.len();
        let basis: Vec<u32> = self.basis.iter().map(|b| b.index()).collect();
        let mut pts: Vec<BitVector> =
            span(&basis).into_iter().map(|e| BitVector::new(e ^ self.offset.index(), n)).collect();
        pts.sort_unstable();
        pts
    }
}

/// The set as a coset `v + L` if it is one. The offset is the smallest point.
pub fn is_affine_subspace(set: &[BitVector]) -> Option<AffineSubspace> {
    let v = *set.iter().min()?;
    let n = v.len();
    let distinct: HashSet<u32> = set.iter().map(|p| p.index()).collect();
    let basis = independent_subset(set.iter().map(|p| p.index() ^ v.index()));
    if distinct.len() != 1 << basis.len() {
        return None;
    }
    Some(AffineSubspace { offset: v, basis: basis.into_iter().map(|b| BitVector::new(b, n)).collect() })
}

/// Rank of `S + v` for any `v` in `S` (the choice does not matter).
pub fn support_rank(set: &[BitVector]) -> usize {
    match set.first() {
        Some(v) => rank_of(set.iter().map(|p| p.index() ^ v.index())),
        None => 0,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlateauedClass {
    NotPlateaued,
    Trivial(usize),
    Nontrivial(usize),
}

impl PlateauedClass {
    pub fn label(&self) -> &'static str {
        match self {
            Self::NotPlateaued => "neither",
            Self::Trivial(_) => "trivial",
            Self::Nontrivial(_) => "nontrivial",
        }
    }
}

impl fmt::Display for PlateauedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotPlateaued => f.write_str("not plateaued"),
            Self::Trivial(s) => write!(f, "trivial {s}-plateaued"),
            Self::Nontrivial(s) => write!(f, "nontrivial {s}-plateaued"),
        }
    }
}

/// Bent and affine functions fall outside `1 <= s < n` and are reported as
/// `NotPlateaued`.
pub fn classify_plateaued(f: &BooleanFunction) -> PlateauedClass {
    classify_spectrum(&wht(f))
}

pub(crate) fn classify_spectrum(spec: &WalshSpectrum) -> PlateauedClass {
    match spec.plateaued_profile() {
        None => PlateauedClass::NotPlateaued,
        Some(p) if is_affine_subspace(&spec.support()).is_some() => PlateauedClass::Trivial(p.s),
        Some(p) => PlateauedClass::Nontrivial(p.s),
    }
}

/// `#S_f * #{a : Delta_f(a) != 0} == 2^n`.
pub fn is_partially_bent(f: &BooleanFunction) -> bool {
    let spec = wht(f);
    spec.support_size() * autocorrelation_from_spectrum(&spec).nonzero_count() == f.len()
}

/// `{a : f(x) + f(x+a) constant}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearStructureSpace {
    pub n: usize,
    pub basis: Vec<BitVector>,
    pub dim: usize,
}

impl LinearStructureSpace {
    pub fn elements(&self) -> Vec<BitVector> {
        let basis: Vec<u32> = self.basis.iter().map(|b| b.index()).collect();
        let mut e: Vec<BitVector> = span(&basis).into_iter().map(|x| BitVector::new(x, self.n)).collect();
        e.sort_unstable();
        e
    }

    pub fn contains(&self, a: &BitVector) -> bool {
        let mut ech = Echelon::new();
        self.basis.iter().for_each(|b| {
            ech.insert(b.index());
        });
        ech.contains(a.index())
    }
}

pub fn linear_structures(f: &BooleanFunction) -> LinearStructureSpace {
    linear_structures_of(&wht(f))
}

fn linear_structures_of(spec: &WalshSpectrum) -> LinearStructureSpace {
    let n = spec.num_vars();
    let ac = autocorrelation_from_spectrum(spec);
    let full = 1i64 << n;
    let lambda = ac.values().iter().enumerate().filter(|(_, d)| d.abs() == full).map(|(a, _)| a as u32);
    let basis: Vec<BitVector> = independent_subset(lambda).into_iter().map(|b| BitVector::new(b, n)).collect();
    LinearStructureSpace { n, dim: basis.len(), basis }
}

/// Quantities unchanged by `f(xA + b) + c.x + eps`. Walsh values are counted
/// by absolute value since the sign pattern moves with `b` and `eps`, and the
/// degree is clamped to at least 1 because affine terms can cancel.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EaFingerprint {
    pub n: usize,
    pub algebraic_degree: usize,
    pub walsh_value_multiset: BTreeMap<u32, u64>,
    pub abs_autocorr_multiset: BTreeMap<u64, u64>,
    pub support_rank: usize,
    pub lambda_dim: usize,
    pub is_trivial: bool,
    pub is_partially_bent: bool,
}

impl EaFingerprint {
    /// Name of the first field that differs.
    pub fn first_difference(&self, other: &Self) -> Option<&'static str> {
        if self.n != other.n {
            Some("n")
        } else if self.algebraic_degree != other.algebraic_degree {
            Some("algebraic_degree")
        } else if self.walsh_value_multiset != other.walsh_value_multiset {
            Some("walsh_value_multiset")
        } else if self.abs_autocorr_multiset != other.abs_autocorr_multiset {
            Some("abs_autocorr_multiset")
        } else if self.support_rank != other.support_rank {
            Some("support_rank")
        } else if self.lambda_dim != other.lambda_dim {
            Some("lambda_dim")
        } else if self.is_trivial != other.is_trivial {
            Some("is_trivial")
        } else if self.is_partially_bent != other.is_partially_bent {
            Some("is_partially_bent")
        } else {
            None
        }
    }
}

pub fn ea_fingerprint(f: &BooleanFunction) -> EaFingerprint {
    let spec = wht(f);
    let ac = autocorrelation_from_spectrum(&spec);
    let mut walsh = BTreeMap::new();
    for w in spec.values() {
        *walsh.entry(w.unsigned_abs()).or_insert(0) += 1;
    }
    let mut auto = BTreeMap::new();
    for d in ac.values() {
        *auto.entry(d.unsigned_abs()).or_insert(0) += 1;
    }
    let support = spec.support();
    EaFingerprint {
        n: f.num_vars(),
        algebraic_degree: f.degree().max(1),
        walsh_value_multiset: walsh,
        abs_autocorr_multiset: auto,
        support_rank: support_rank(&support),
        lambda_dim: linear_structures_of(&spec).dim,
        is_trivial: is_affine_subspace(&support).is_some(),
        is_partially_bent: support.len() * ac.nonzero_count() == f.len(),
    }
}

/// `S_h = c + S_f A^T`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportRelation {
    pub a: BinaryMatrix,
    pub c: BitVector,
}

impl SupportRelation {
    /// `c + w A^T`.
    pub fn map(&self, w: &BitVector) -> BitVector {
        BitVector::new(self.c.index() ^ self.a.transpose().apply(w.index()), self.c.len())
    }
}

/// Per-point class used for pruning: `-1` outside the support, otherwise a
/// value that the relation must preserve.
type Classes = Vec<i64>;

fn set_classes(n: usize, set: &[BitVector]) -> Result<Classes> {
    let mut c = vec![-1; 1 << n];
    for p in set {
        if p.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.len() });
        }
        c[p.index() as usize] = 0;
    }
    Ok(c)
}

fn spectrum_classes(spec: &WalshSpectrum) -> Classes {
    spec.values().iter().map(|&w| if w == 0 { -1 } else { w.unsigned_abs() as i64 }).collect()
}

struct RelationSearch<'a> {
    n: usize,
    cf: &'a [i64],
    ch: &'a [i64],
    v: u32,
    frame: Vec<u32>,
    /// Elements of `S_f + v` grouped by the highest frame index in their
    /// frame coordinates, with those coordinates as a bit mask.
    groups: Vec<Vec<(u32, u32)>>,
    budget: u64,
    nodes: u64,
}

impl RelationSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn run(&mut self, h_points: &[u32], visit: &mut dyn FnMut(SupportRelation) -> ControlFlow<()>) -> Result<bool> {
        for &z0 in h_points {
            if self.ch[z0 as usize] != self.cf[self.v as usize] {
                continue;
            }
            self.tick()?;
            let mut targets: Vec<u32> = h_points.iter().map(|&z| z ^ z0).filter(|&y| y != 0).collect();
            targets.sort_unstable();
            let mut imgs = Vec::with_capacity(self.frame.len());
            if self.extend(z0, &targets, &mut imgs, &Echelon::new(), visit)?.is_break() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn extend(
        &mut self,
        z0: u32,
        targets: &[u32],
        imgs: &mut Vec<u32>,
        ech: &Echelon,
        visit: &mut dyn FnMut(SupportRelation) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let k = imgs.len();
        if k == self.frame.len() {
            return Ok(visit(self.complete(z0, imgs)));
        }
        let want = self.cf[(self.v ^ self.frame[k]) as usize];
        for &y in targets {
            if self.ch[(y ^ z0) as usize] != want || ech.contains(y) {
                continue;
            }
            self.tick()?;
            imgs.push(y);
            let consistent = self.groups[k].iter().all(|&(e, combo)| {
                let img = imgs.iter().enumerate().filter(|(j, _)| combo >> j & 1 == 1).fold(0, |a, (_, &y)| a ^ y);
                self.ch[(img ^ z0) as usize] == self.cf[(e ^ self.v) as usize]
            });
            if consistent {
                let mut next = ech.clone();
                next.insert(y);
                if self.extend(z0, targets, imgs, &next, visit)?.is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
            imgs.pop();
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Extends the frame map to all of `F_2^n` by pairing unit vectors that
    /// complete the frame and its image to bases.
    fn complete(&self, z0: u32, imgs: &[u32]) -> SupportRelation {
        let n = self.n;
        let fill = |basis: &[u32]| {
            let mut ech = Echelon::new();
            let mut rows = basis.to_vec();
            rows.iter().for_each(|&b| {
                ech.insert(b);
            });
            for i in (0..n).rev() {
                if ech.insert(1 << i) {
                    rows.push(1 << i);
                }
            }
            BinaryMatrix::from_packed(rows, n)
        };
        let b = fill(&self.frame);
        let img = fill(imgs);
        let nmat = b.inverse().expect("frame completes to a basis").mul(&img).expect("square");
        let c = z0 ^ nmat.apply(self.v);
        SupportRelation { a: nmat.transpose(), c: BitVector::new(c, n) }
    }
}

/// Frame coordinates of each element of `es` (all in the span of `frame`).
fn frame_coordinates(frame: &[u32], es: &[u32]) -> Vec<u32> {
    let mut rows: Vec<(u32, u32)> = Vec::new();
    let reduce = |rows: &[(u32, u32)], mut x: u32| {
        let mut combo = 0;
        for &(r, c) in rows {
            if x ^ r < x {
                x ^= r;
                combo ^= c;
            }
        }
        (x, combo)
    };
    for (k, &b) in frame.iter().enumerate() {
        let (r, c) = reduce(&rows, b);
        rows.push((r, c ^ (1 << k)));
        rows.sort_unstable_by_key(|r| std::cmp::Reverse(r.0));
    }
    es.iter()
        .map(|&e| {
            let (r, c) = reduce(&rows, e);
            debug_assert_eq!(r, 0);
            c
        })
        .collect()
}

fn search(
    n: usize,
    cf: &[i64],
    ch: &[i64],
    budget: u64,
    visit: &mut dyn FnMut(SupportRelation) -> ControlFlow<()>,
) -> Result<bool> {
    let f_points: Vec<u32> = (0..1u32 << n).filter(|&u| cf[u as usize] >= 0).collect();
    let h_points: Vec<u32> = (0..1u32 << n).filter(|&u| ch[u as usize] >= 0).collect();
    if f_points.len() != h_points.len() || f_points.is_empty() {
        return Ok(false);
    }
    let class_counts = |c: &[i64]| {
        let mut m = BTreeMap::new();
        c.iter().filter(|&&x| x >= 0).for_each(|&x| *m.entry(x).or_insert(0) += 1);
        m
    };
    if class_counts(cf) != class_counts(ch) {
        return Ok(false);
    }
    let v = f_points[0];
    let es: Vec<u32> = f_points.iter().map(|&p| p ^ v).collect();
    let rank_h = rank_of(h_points.iter().map(|&p| p ^ h_points[0]));
    let frame = independent_subset(es.iter().copied());
    if frame.len() != rank_h {
        return Ok(false);
    }
    let mut groups = vec![Vec::new(); frame.len()];
    for (&e, combo) in es.iter().zip(frame_coordinates(&frame, &es)) {
        if combo != 0 && !combo.is_power_of_two() {
            groups[31 - combo.leading_zeros() as usize].push((e, combo));
        }
    }
    let mut s = RelationSearch { n, cf, ch, v, frame, groups, budget, nodes: 0 };
    s.run(&h_points, visit)
}

/// Visits affine maps `w -> c + w A^T` carrying `S_f` onto `S_h`, one per
/// distinct action on `S_f`, until `visit` breaks. Returns whether it broke.
/// The budget bounds the number of partial assignments tried.
pub fn for_each_support_relation(
    sf: &[BitVector],
    sh: &[BitVector],
    budget: u64,
    visit: &mut dyn FnMut(SupportRelation) -> ControlFlow<()>,
) -> Result<bool> {
    let n = sf.first().or(sh.first()).map_or(0, |p| p.len());
    crate::bits::check_vars(n)?;
    search(n, &set_classes(n, sf)?, &set_classes(n, sh)?, budget, visit)
}

/// A witness `S_h = c + S_f A^T`, or `None` once the search is exhausted.
pub fn find_support_relation(sf: &[BitVector], sh: &[BitVector], budget: u64) -> Result<Option<SupportRelation>> {
    let mut found = None;
    for_each_support_relation(sf, sh, budget, &mut |rel| {
        found = Some(rel);
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Solves `w.b + eps = d` over GF(2); `None` if inconsistent.
fn solve_affine_signs(n: usize, eqs: impl IntoIterator<Item = (u32, bool)>) -> Option<(u32, bool)> {
    let mut rows: Vec<(u32, bool)> = Vec::new();
    for (w, d) in eqs {
        let (mut key, mut rhs) = ((w << 1) | 1, d);
        for &(r, rr) in &rows {
            if key ^ r < key {
                key ^= r;
                rhs ^= rr;
            }
        }
        match key {
            0 if rhs => return None,
            0 => {}
            _ => {
                rows.push((key, rhs));
                rows.sort_unstable_by_key(|r| std::cmp::Reverse(r.0));
            }
        }
    }
    let mut sol = 0u32;
    for &(key, rhs) in rows.iter().rev() {
        let lead = 31 - key.leading_zeros();
        let rest = key & !(1 << lead);
        if rhs ^ parity(rest & sol) {
            sol |= 1 << lead;
        }
    }
    debug_assert!(n < 32);
    Some((sol >> 1, sol & 1 == 1))
}

fn dual_relation(sf: &WalshSpectrum, sh: &WalshSpectrum, rel: &SupportRelation) -> Result<Option<(BitVector, bool)>> {
    let n = sf.num_vars();
    if sh.num_vars() != n || rel.a.rows() != n || rel.a.cols() != n || rel.c.len() != n || !rel.a.is_invertible() {
        return Err(Error::InvalidRelation);
    }
    let nmat = rel.a.transpose();
    let c = rel.c.index();
    let mut eqs = Vec::with_capacity(sf.support_size());
    let mut count = 0;
    for (w, &wf) in sf.values().iter().enumerate() {
        if wf == 0 {
            continue;
        }
        let z = c ^ nmat.apply(w as u32);
        let wh = sh.values()[z as usize];
        if wh == 0 {
            return Err(Error::InvalidRelation);
        }
        count += 1;
        if wh.abs() != wf.abs() {
            return Ok(None);
        }
        eqs.push((w as u32, (wh < 0) ^ (wf < 0)));
    }
    if count != sh.support_size() {
        return Err(Error::InvalidRelation);
    }
    Ok(solve_affine_signs(n, eqs).map(|(b, eps)| (BitVector::new(b, n), eps)))
}

/// Looks for `(b, eps)` with `W_h(c + w A^T) = (-1)^{eps + w.b} W_f(w)` on
/// `S_f`. For plateaued functions this is the dual identity
/// `h*(z_i) = f*(w_i) + w_i.b + eps` in the order induced by the relation;
/// any solution makes `h(x) = f(xA + b) + c.x + eps`.
pub fn check_dual_relation(
    f: &BooleanFunction,
    h: &BooleanFunction,
    rel: &SupportRelation,
) -> Result<Option<(BitVector, bool)>> {
    dual_relation(&wht(f), &wht(h), rel)
}

/// `h(x) = f(xA + b) + c.x + eps`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EaWitness {
    pub a: BinaryMatrix,
    pub b: BitVector,
    pub c: BitVector,
    pub eps: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EaVerdict {
    Equivalent(EaWitness),
    Inequivalent(String),
    Inconclusive(String),
}

pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Fingerprint filter, then a search over support relations that preserve
/// `|W|`, solving for `(b, eps)` at each one. Equivalent verdicts are
/// re-checked on the truth tables; Inequivalent means the filter failed or
/// the search ran to completion.
pub fn ea_equivalent_small(f: &BooleanFunction, h: &BooleanFunction, budget: u64) -> EaVerdict {
    if f.num_vars() != h.num_vars() {
        return EaVerdict::Inequivalent(format!("variable counts {} and {}", f.num_vars(), h.num_vars()));
    }
    if let Some(field) = ea_fingerprint(f).first_difference(&ea_fingerprint(h)) {
        return EaVerdict::Inequivalent(format!("fingerprints differ in {field}"));
    }
    let n = f.num_vars();
    let (sf, sh) = (wht(f), wht(h));
    let (cf, ch) = (spectrum_classes(&sf), spectrum_classes(&sh));
    let mut witness = None;
    let outcome = search(n, &cf, &ch, budget, &mut |rel| {
        if let Ok(Some((b, eps))) = dual_relation(&sf, &sh, &rel) {
            let w = EaWitness { a: rel.a, b, c: rel.c, eps };
            if f.apply_affine(&w.a, &w.b, &w.c, w.eps).as_ref() == Ok(h) {
                witness = Some(w);
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    match (outcome, witness) {
        (_, Some(w)) => EaVerdict::Equivalent(w),
        (Ok(_), None) => EaVerdict::Inequivalent("no affine map of the supports relates the spectra".into()),
        (Err(Error::BudgetExceeded(b)), None) => EaVerdict::Inconclusive(format!("search budget of {b} exhausted")),
        (Err(e), None) => EaVerdict::Inconclusive(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_function;
    use crate::spectral::walsh_support;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(spec: &str) -> BooleanFunction {
        parse_function(spec).unwrap()
    }

    fn pts(list: &[&str]) -> Vec<BitVector> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn affine_subspace_detection() {
        assert!(is_affine_subspace(&pts(&["010", "011", "111", "101"])).is_none());
        let s: Vec<BitVector> = (0..64).map(|i| BitVector::new(i << 1, 7)).collect();
        let a = is_affine_subspace(&s).unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.points(), s);
        assert_eq!(is_affine_subspace(&pts(&["10110"])).unwrap().dim(), 0);
        assert!(is_affine_subspace(&pts(&["001", "010", "100"])).is_none());
    }

    #[test]
    fn known_classifications() {
        let ex31 = f("anf:x1*x4+x2*x5+x3*x6+x4*x5*x6");
        assert_eq!(ex31.num_vars(), 6);
        let ex31 = f("anf:7:x1*x4+x2*x5+x3*x6+x4*x5*x6");
        assert_eq!(classify_plateaued(&ex31), PlateauedClass::Trivial(1));
        let ex41 = f("anf:x1*x3+x2*x4+x1*x2*x5");
        assert_eq!(classify_plateaued(&ex41), PlateauedClass::Nontrivial(1));
        assert!(!is_partially_bent(&ex41));
        assert_eq!(linear_structures(&ex41).dim, 0);
        let ex32 = f("anf:x1*x3+x1*x2*x5+x2*x4+x2*x6");
        assert_eq!(classify_plateaued(&ex32), PlateauedClass::Nontrivial(2));
        let lambda = linear_structures(&ex32);
        assert_eq!(lambda.elements(), pts(&["000000", "000101"]));
        assert_eq!(support_rank(&walsh_support(&ex32)), 5);
        assert_eq!(classify_plateaued(&f("anf:1")), PlateauedClass::NotPlateaued);
    }

    #[test]
    fn quadratics_are_partially_bent() {
        for spec in ["anf:x1*x2+x3", "anf:x1*x2+x2*x3+x4*x5", "anf:x1*x4+x2*x3+x1"] {
            assert!(is_partially_bent(&f(spec)), "{spec}");
        }
    }

    #[test]
    fn fingerprint_sees_degree() {
        let a = ea_fingerprint(&f("anf:7:x1*x4+x2*x5+x3*x6+x4*x5*x6"));
        let b = ea_fingerprint(&f("anf:7:x1+x3+x1*x4+x5+x2*x5+x6+x3*x6+x7"));
        assert_eq!(a.first_difference(&b), Some("algebraic_degree"));
    }

    #[test]
    fn affine_solver() {
        // w.b + eps for b = 101, eps = 1
        let eqs = (0..8u32).map(|w| (w, parity(w & 0b101) ^ true));
        assert_eq!(solve_affine_signs(3, eqs), Some((0b101, true)));
        assert_eq!(solve_affine_signs(3, [(1, false), (1, true)]), None);
    }

    #[test]
    fn planted_relation_is_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let func = f("anf:x1*x3+x2*x4+x1*x2*x5");
        for _ in 0..10 {
            let a = BinaryMatrix::random_invertible_with(5, &mut rng);
            let b = BitVector::new(rng.gen::<u32>(), 5);
            let c = BitVector::new(rng.gen::<u32>(), 5);
            let eps = rng.gen::<bool>();
            let h = func.apply_affine(&a, &b, &c, eps).unwrap();
            let rel = find_support_relation(&walsh_support(&func), &walsh_support(&h), DEFAULT_BUDGET)
                .unwrap()
                .unwrap();
            let image: Vec<BitVector> = walsh_support(&func).iter().map(|w| rel.map(w)).collect();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, walsh_support(&h));
            match ea_equivalent_small(&func, &h, DEFAULT_BUDGET) {
                EaVerdict::Equivalent(w) => assert_eq!(func.apply_affine(&w.a, &w.b, &w.c, w.eps).unwrap(), h),
                v => panic!("{v:?}"),
            }
        }
    }

    #[test]
    fn induced_relation_recovers_b_and_eps() {
        let func = f("anf:x1*x3+x2*x4+x1*x2*x5");
        let a = BinaryMatrix::random_invertible(5, 3);
        let (b, c): (BitVector, BitVector) = ("10110".parse().unwrap(), "01011".parse().unwrap());
        let h = func.apply_affine(&a, &b, &c, true).unwrap();
        let rel = SupportRelation { a: a.clone(), c };
        let (b2, eps) = check_dual_relation(&func, &h, &rel).unwrap().unwrap();
        assert_eq!(func.apply_affine(&a, &b2, &c, eps).unwrap(), h);
        let bogus = SupportRelation { a: BinaryMatrix::identity(5), c: "11111".parse().unwrap() };
        assert_eq!(check_dual_relation(&func, &h, &bogus), Err(Error::InvalidRelation));
    }

    #[test]
    fn cosets_always_relate() {
        let s1: Vec<BitVector> = pts(&["0001", "0011", "1001", "1011"]);
        let s2: Vec<BitVector> = pts(&["0100", "0111", "1100", "1111"]);
        assert!(find_support_relation(&s1, &s2, 1000).unwrap().is_some());
        let nonaffine = pts(&["0000", "0001", "0010", "0111"]);
        assert!(find_support_relation(&s1, &nonaffine, 1000).unwrap().is_none());
    }

    #[test]
    fn trivial_and_nontrivial_are_inequivalent() {
        let triv = f("anf:5:x1*x3+x2*x4");
        let non = f("anf:x1*x3+x2*x4+x1*x2*x5");
        assert!(matches!(ea_equivalent_small(&triv, &non, DEFAULT_BUDGET), EaVerdict::Inequivalent(_)));
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let func = f("anf:x1*x3+x2*x4+x1*x2*x5");
        let h = func.apply_affine(&BinaryMatrix::random_invertible(5, 11), &BitVector::zero(5), &BitVector::zero(5), false);
        assert!(matches!(ea_equivalent_small(&func, &h.unwrap(), 3), EaVerdict::Inconclusive(_)));
    }
}
