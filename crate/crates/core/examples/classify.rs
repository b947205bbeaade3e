//! Spectral classification of a few functions: plateaued order, support
//! shape, linear structures and the autocorrelation count.
//!
//! ```text
//! cargo run --example classify -- anf:x1*x2+x3
//! ```

use plateaued::{analyze, autocorrelation, linear_structures, parse_function, plateaued_profile, wht};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec![
            "anf:x1*x3+x2*x4+x1*x2*x5".to_string(),
            "anf:x1*x3+x1*x2*x5+x2*x4+x2*x6".to_string(),
            "anf:x1*x3+x2*x4+x5".to_string(),
            "anf:x1*x3+x2*x4".to_string(),
            "anf:x1*x2*x3+x4".to_string(),
        ]
    } else {
        args
    };

    for spec in inputs {
        let f = parse_function(&spec)?;
        let r = analyze(&f);
        let order = match plateaued_profile(&f) {
            Some(p) => format!("{}-plateaued (amplitude {})", p.s, p.amplitude),
            None if r.bent => "bent".to_string(),
            None => format!("{} distinct |W| values", distinct_abs(wht(&f).values())),
        };
        println!("{spec}");
        println!("  {order}, {}", r.classification);
        println!("  support {} points of rank {}, partially bent {}", r.support_size, r.support_rank, r.partially_bent);
        let lambda = linear_structures(&f);
        let shown: Vec<String> = lambda.elements().iter().map(|e| e.to_string()).collect();
        println!("  linear structures {{{}}}", shown.join(", "));
        let ac = autocorrelation(&f);
        println!("  autocorrelation nonzero at {} points", ac.nonzero_count());
    }
    Ok(())
}

fn distinct_abs(values: &[i32]) -> usize {
    let mut v: Vec<u32> = values.iter().map(|w| w.unsigned_abs()).filter(|&w| w != 0).collect();
    v.sort_unstable();
    v.dedup();
    v.len()
}
