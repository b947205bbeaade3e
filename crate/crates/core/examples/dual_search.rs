//! Count the duals that make a support valid. Four-variable duals are
//! enumerated exhaustively; larger ones need `--budget` and are sampled.

use plateaued::construct::{search_duals, support_from_columns};
use plateaued::{parse_function, BooleanFunction};

fn support_with(extra: &str, m: usize) -> plateaued::Result<plateaued::WalshSupport> {
    let mut columns: Vec<BooleanFunction> = (1..=m).map(|i| BooleanFunction::variable(i, m)).collect::<Result<_, _>>()?;
    columns.push(parse_function(extra)?);
    support_from_columns(&columns)
}

fn main() -> plateaued::Result<()> {
    for extra in ["anf:4:x1*x2+x3*x4", "anf:4:x3*x4", "anf:4:0"] {
        let r = search_duals(&support_with(extra, 4)?, None, 0)?;
        println!("extra column {extra:<20} {:>4} duals of {} candidates", r.count, r.examined);
    }

    let err = search_duals(&support_with("anf:6:x1*x2*x3", 6)?, None, 0).unwrap_err();
    println!("six-variable duals without a budget: {err}");
    Ok(())
}
