mod common;

use common::*;
use plateaued::classify::{classify_plateaued, ea_fingerprint, is_partially_bent, linear_structures, support_rank, PlateauedClass};
use plateaued::construct::{bent_distance_to_profile, build_from_spectrum, ProfileCheck, SpectralSpec, Thm41};
use plateaued::format::{format_support, parse_support};
use plateaued::spectral::{
    autocorrelation, autocorrelation_from_spectrum, extract_dual, inverse_wht, plateaued_profile, wht, PlateauedProfile,
    WalshSupport,
};
use plateaued::transform::{compose, decompose_form27, hou_langevin_transform, sigma_permutation, span_subset_lp, tau_permutation};
use plateaued::transform::VectorialMap;
use plateaued::{format_anf, format_tt, parse_function, BinaryMatrix, BooleanFunction};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn function(max_n: usize) -> impl Strategy<Value = BooleanFunction> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), 1 << n).prop_map(|bits| BooleanFunction::from_bits(&bits).unwrap())
    })
}

fn plateaued_params() -> impl Strategy<Value = (usize, usize, u64)> {
    prop_oneof![Just((2usize, 1usize)), Just((2, 2)), Just((3, 1)), Just((2, 3)), Just((1, 1))]
        .prop_flat_map(|(k, s)| (Just(k), Just(s), any::<u64>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_transforms_match_definitions(g in function(7)) {
        let w: Vec<i64> = wht(&g).values().iter().map(|&v| v as i64).collect();
        prop_assert_eq!(&w, &walsh(&g));
        let direct = autocorr(&g);
        prop_assert_eq!(autocorrelation(&g).values().to_vec(), direct.clone());
        prop_assert_eq!(autocorrelation_from_spectrum(&wht(&g)).values().to_vec(), direct);
        prop_assert_eq!(inverse_wht(&wht(&g)).unwrap(), g);
    }

    #[test]
    fn parseval(g in function(8)) {
        let n = g.num_vars();
        let total: i64 = walsh(&g).iter().map(|w| w * w).sum();
        prop_assert_eq!(total, 1i64 << (2 * n));
    }

    #[test]
    fn anf_matches_subset_sums(g in function(7)) {
        let coeffs = anf_coefficients(&g);
        let mut got: Vec<u32> = g.to_anf().monomials().map(|m| m.index()).collect();
        got.sort_unstable();
        let want: Vec<u32> = (0..coeffs.len() as u32).filter(|&m| coeffs[m as usize]).collect();
        prop_assert_eq!(got, want);
        prop_assert!((0..g.len() as u32).all(|x| eval_anf(&coeffs, x) == g.get(x)));
    }

    #[test]
    fn text_formats_round_trip(g in function(8)) {
        prop_assert_eq!(parse_function(&format_anf(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_function(&format_tt(&g)).unwrap(), g);
    }

    #[test]
    fn rank_plus_linear_structures(g in function(7)) {
        let n = g.num_vars();
        let lambda = linear_structures(&g);
        prop_assert_eq!(support_rank(&wht(&g).support()) + lambda.dim, n);
        prop_assert_eq!(lambda.elements().iter().map(|e| e.index()).collect::<Vec<_>>(), common::linear_structures(&g));
    }

    #[test]
    fn constructed_functions_have_expected_counts((k, s, seed) in plateaued_params()) {
        let c = Thm41::random(k, s, &mut rng(seed)).construct().unwrap();
        let g = &c.function;
        let n = 2 * k + s;
        let p = plateaued_profile(g).unwrap();
        prop_assert_eq!((p.s, p.amplitude), (s, 1u32 << ((n + s) / 2)));
        let (plus, minus, zero) = PlateauedProfile::expected_counts(n, s, g.get(0));
        prop_assert_eq!((p.count_plus, p.count_minus, p.count_zero), (plus, minus, zero));
        let amp = 1i64 << ((n + s) / 2);
        let w = walsh(g);
        prop_assert_eq!(w.iter().filter(|&&v| v == amp).count() as u64 + w.iter().filter(|&&v| v == -amp).count() as u64, 1u64 << (n - s));
        prop_assert_eq!(extract_dual(g, &c.spec.support).unwrap().base, c.spec.dual.clone());
    }

    #[test]
    fn construction_iff_profile((k, s, seed) in plateaued_params(), flips in proptest::collection::vec(any::<u8>(), 2)) {
        let base = Thm41::random(k, s, &mut rng(seed)).construct().unwrap().spec;
        let m = 2 * k;
        // Swapping a 0 and a 1 keeps the weight admissible and usually breaks the profile.
        let mut dual = base.dual.clone();
        let ones: Vec<u32> = (0..dual.len() as u32).filter(|&x| dual.get(x)).collect();
        let zeros: Vec<u32> = (0..dual.len() as u32).filter(|&x| !dual.get(x)).collect();
        let (a, b) = (ones[flips[0] as usize % ones.len()], zeros[flips[1] as usize % zeros.len()]);
        dual.set(a, false);
        dual.set(b, true);
        prop_assert_eq!(dual.num_vars(), m);
        let spec = SpectralSpec::new(base.support.clone(), dual.clone()).unwrap();
        let oracle = first_profile_violation(spec.support.points(), &dual);
        match (oracle, bent_distance_to_profile(&spec.support, &dual).unwrap(), build_from_spectrum(&spec)) {
            (None, ProfileCheck::Ok, Ok(_)) => {}
            (Some((u, d)), ProfileCheck::Violated { u: cu, distance }, Err(plateaued::Error::NotPlateaued { point, distance: bd })) => {
                prop_assert_eq!((u, d), (cu.index(), distance));
                prop_assert_eq!((point, bd), (cu, distance));
            }
            other => prop_assert!(false, "disagreement: {:?}", (other.0, other.1, other.2.map(|_| ()))),
        }
    }

    #[test]
    fn fingerprint_is_ea_invariant(g in function(6), seed in any::<u64>()) {
        let n = g.num_vars();
        let mut r = rng(seed);
        let h = g.apply_affine(&random_invertible(n, &mut r), &random_vector(n, &mut r), &random_vector(n, &mut r), seed & 1 == 1).unwrap();
        prop_assert_eq!(ea_fingerprint(&g), ea_fingerprint(&h));
        prop_assert_eq!(classify_plateaued(&g).label(), classify_plateaued(&h).label());
    }

    #[test]
    fn trivial_iff_partially_bent((k, s, seed) in plateaued_params()) {
        let g = Thm41::random(k, s, &mut rng(seed)).construct().unwrap().function;
        let trivial = matches!(classify_plateaued(&g), PlateauedClass::Trivial(_));
        prop_assert_eq!(trivial, is_partially_bent(&g));
        let r = autocorr(&g).iter().filter(|&&d| d != 0).count();
        prop_assert_eq!(trivial, support(&g).len() * r == g.len());
    }

    #[test]
    fn support_files_round_trip((k, s, seed) in plateaued_params()) {
        let c = Thm41::random(k, s, &mut rng(seed)).construct().unwrap();
        let ordered = c.spec.support.clone();
        let parsed = parse_support(&format_support(&ordered)).unwrap();
        prop_assert_eq!(parsed.points(), ordered.points());
        let set = ordered.points().to_vec();
        let canon = WalshSupport::canonical(ordered.num_vars(), &set).unwrap();
        prop_assert_eq!(parse_support(&format_support(&canon)).unwrap(), canon);
    }

    #[test]
    fn matrix_inverse(seed in any::<u64>(), n in 1usize..=10) {
        let a = random_invertible(n, &mut rng(seed));
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), BinaryMatrix::identity(n));
        prop_assert!((0..1u32 << n.min(6)).all(|x| row_times(row_times(x, &a), &inv) == x));
    }
}

/// `x1 f1 + x2 f2 + x1 x2 alpha + g` with `f1, f2, g` random and `alpha`
/// affine, all in the remaining variables.
fn form27(n: usize, seed: u64) -> BooleanFunction {
    let mut r = rng(seed);
    let rest = n - 2;
    let (f1, f2, g) = (random_function(rest, &mut r), random_function(rest, &mut r), random_function(rest, &mut r));
    let lin = random_vector(rest, &mut r).index();
    let c = rand::Rng::gen::<bool>(&mut r);
    let top = 1u32 << (n - 1);
    let second = 1u32 << (n - 2);
    let low = second - 1;
    BooleanFunction::from_fn(n, |x| {
        let (x1, x2, y) = (x & top != 0, x & second != 0, x & low);
        (x1 && f1.get(y)) ^ (x2 && f2.get(y)) ^ (x1 && x2 && (dot(lin, y) ^ c)) ^ g.get(y)
    })
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transform_permutations_are_inverse(n in 3usize..=6, seed in any::<u64>()) {
        let f = form27(n, seed);
        let d = decompose_form27(&f, 1, 2).unwrap();
        prop_assert_eq!(d.reassemble(), f.clone());
        let (sigma, tau) = (sigma_permutation(&d), tau_permutation(&d));
        prop_assert!((0..1u32 << n).all(|x| sigma.apply(tau.apply(x)) == x && tau.apply(sigma.apply(x)) == x));
        let amps: std::collections::BTreeSet<i64> = walsh(&f).iter().map(|w| w.abs()).filter(|&w| w != 0).collect();
        match hou_langevin_transform(&d) {
            Ok(big_f) => prop_assert_eq!(big_f, compose(&f, &tau).unwrap()),
            Err(e) => {
                prop_assert_eq!(e, plateaued::Error::FunctionNotPlateaued);
                prop_assert!(amps.len() > 1);
            }
        }
    }

    #[test]
    fn lp_span_iff_transform_is_plateaued((k, s, seed) in plateaued_params(), mutate in any::<bool>()) {
        let mut r = rng(seed);
        // first Thm41 function with a decomposition at some pair of pivots
        let (f, d) = (0..64)
            .find_map(|_| {
                let f = Thm41::random(k, s, &mut r).construct().unwrap().function;
                let n = f.num_vars();
                let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
                pairs.into_iter().find_map(|(i, j)| decompose_form27(&f, i, j).ok()).map(|d| (f, d))
            })
            .expect("some decomposable function");
        let n = f.num_vars();
        let mut sigma = sigma_permutation(&d);
        if mutate {
            // y1 + h(y2, ..., yn) keeps the map bijective
            let h = random_function(n - 1, &mut r);
            let top = 1u32 << (n - 1);
            let images = sigma.images().iter().map(|&y| if h.get(y & (top - 1)) { y ^ top } else { y }).collect();
            sigma = VectorialMap::from_images(n, images).unwrap();
        }
        let amp = 1i64 << ((n + s) / 2);
        let composed = compose(&f, &sigma.inverse().unwrap()).unwrap();
        let plateaued = walsh(&composed).iter().all(|&w| w == 0 || w.abs() == amp);
        // exact criterion: every combination u.sigma has an admissible value at 0
        let at_zero = (0..1u32 << n).all(|u| {
            let w: i64 = sigma.images().iter().enumerate().map(|(y, &img)| sign(f.get(y as u32) ^ dot(u, img))).sum();
            w == 0 || w.abs() == amp
        });
        prop_assert_eq!(at_zero, plateaued);
        let in_lp = span_subset_lp(&f, &sigma).unwrap();
        if mutate {
            prop_assert!(!in_lp || plateaued);
        } else {
            prop_assert!(in_lp && plateaued);
        }
    }

    #[test]
    fn lp_span_is_sufficient_for_any_permutation((k, s, seed) in plateaued_params()) {
        let f = Thm41::random(k, s, &mut rng(seed)).construct().unwrap().function;
        let n = f.num_vars();
        let mut images: Vec<u32> = (0..1u32 << n).collect();
        images.shuffle(&mut rng(seed ^ 0x5eed));
        let p = VectorialMap::from_images(n, images).unwrap();
        if span_subset_lp(&f, &p).unwrap() {
            let amp = 1i64 << ((n + s) / 2);
            let composed = compose(&f, &p.inverse().unwrap()).unwrap();
            prop_assert!(walsh(&composed).iter().all(|&w| w == 0 || w.abs() == amp));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ea_verdicts_match_brute_force(n in 2usize..=4, seed in any::<u64>(), related in any::<bool>()) {
        let mut r = rng(seed);
        let f = random_function(n, &mut r);
        let h = if related {
            f.apply_affine(&random_invertible(n, &mut r), &random_vector(n, &mut r), &random_vector(n, &mut r), seed & 1 == 1).unwrap()
        } else {
            random_function(n, &mut r)
        };
        let truth = brute_force_ea(&f, &h);
        match plateaued::ea_equivalent_small(&f, &h, u64::MAX) {
            plateaued::EaVerdict::Equivalent(w) => {
                prop_assert!(truth);
                prop_assert_eq!(f.apply_affine(&w.a, &w.b, &w.c, w.eps).unwrap(), h);
            }
            plateaued::EaVerdict::Inequivalent(_) => prop_assert!(!truth),
            plateaued::EaVerdict::Inconclusive(reason) => prop_assert!(false, "{}", reason),
        }
    }
}
