//! Decompose a semi-bent cubic around two pivots, apply the nonlinear input
//! permutation and compare the two functions.

use plateaued::transform::{sigma_permutation, span_subset_lp, tau_permutation};
use plateaued::{compose, decompose_form27, ea_fingerprint, format_anf, hou_langevin_transform, parse_function, wht};

fn main() -> plateaued::Result<()> {
    let f = parse_function("anf:x1*x2*x5+x1*x3+x2*x4+x5")?;
    let d = decompose_form27(&f, 1, 2)?;
    println!("f  = {}", format_anf(&f));
    println!("f1 = {}, f2 = {}, alpha = {}, g = {}", d.f1.to_anf(), d.f2.to_anf(), d.alpha.to_anf(), d.g.to_anf());

    let big = hou_langevin_transform(&d)?;
    let (sigma, tau) = (sigma_permutation(&d), tau_permutation(&d));
    assert_eq!(compose(&f, &tau)?, big);
    println!("F  = {}", format_anf(&big));
    println!("W_F = {:?}", wht(&big).values());
    println!("coordinates of sigma span a subset of lp(f): {}", span_subset_lp(&f, &sigma)?);

    let (a, b) = (ea_fingerprint(&f), ea_fingerprint(&big));
    match a.first_difference(&b) {
        Some(field) => println!("f and F differ in {field}, so they are EA-inequivalent"),
        None => println!("fingerprints agree"),
    }
    Ok(())
}
