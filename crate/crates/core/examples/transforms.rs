//! The three transforms on one small function: Walsh, autocorrelation and
//! the algebraic normal form, with round trips.

use plateaued::{autocorrelation, format_anf, format_tt, inverse_wht, parse_function, wht};

fn main() -> plateaued::Result<()> {
    let f = parse_function("tt:4:6A5C")?;
    println!("{}  =  {}", format_tt(&f), format_anf(&f));

    let w = wht(&f);
    println!("W   = {:?}", w.values());
    assert_eq!(inverse_wht(&w)?, f);
    println!("A   = {:?}", autocorrelation(&f).values());

    let anf = f.to_anf();
    println!("deg = {}, monomials = {}", anf.degree(), anf.monomials().count());
    assert_eq!(anf.to_truth_table(), f);
    Ok(())
}
