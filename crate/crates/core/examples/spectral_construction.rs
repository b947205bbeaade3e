//! Build a function from an ordered Walsh support and a dual, then watch the
//! profile check reject a dual that is not at bent distance.
//!
//! ```text
//! cargo run --example spectral_construction
//! ```

use plateaued::construct::{bent_distance_to_profile, support_from_columns, ProfileCheck};
use plateaued::{analyze, build_from_spectrum, format_anf, parse_function, BooleanFunction, SpectralSpec};

fn main() -> plateaued::Result<()> {
    // Rows (x, x3*x4) for x in F_2^4, lexicographic in x.
    let mut columns: Vec<BooleanFunction> = (1..=4).map(|i| BooleanFunction::variable(i, 4)).collect::<Result<_, _>>()?;
    columns.push(parse_function("anf:4:x3*x4")?);
    let support = support_from_columns(&columns)?;

    let dual = parse_function("anf:4:x1*x3+x2*x4")?;
    let spec = SpectralSpec::new(support.clone(), dual)?;
    let f = build_from_spectrum(&spec)?;
    let report = analyze(&f);
    println!("built    {}", format_anf(&f));
    println!(
        "         s = {}, classification {}, #R = {}, dim of linear structures {}",
        spec.s(),
        report.classification,
        report.autocorr_nonzero_count,
        report.lambda_dim
    );

    let bad = parse_function("anf:4:x1*x2+x3*x4")?;
    match bent_distance_to_profile(&support, &bad)? {
        ProfileCheck::Ok => println!("{} passes the profile check", format_anf(&bad)),
        ProfileCheck::Violated { u, distance } => {
            println!("rejected {} : distance {distance} to the profile column of u = {u}", format_anf(&bad))
        }
    }
    let err = build_from_spectrum(&SpectralSpec::new(support, bad)?).unwrap_err();
    println!("         build_from_spectrum: {err}");
    Ok(())
}
