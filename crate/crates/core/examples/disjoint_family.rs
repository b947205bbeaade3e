//! Two semi-bent functions on shifted copies of one support, glued into a
//! bent function on six variables.

use plateaued::construct::{disjoint_family, support_from_columns, PlateauedFamily};
use plateaued::{concat_bent, format_anf, is_bent, parse_function, walsh_support, BooleanFunction};

fn main() -> plateaued::Result<()> {
    let mut columns: Vec<BooleanFunction> = (1..=4).map(|i| BooleanFunction::variable(i, 4)).collect::<Result<_, _>>()?;
    columns.push(parse_function("anf:4:x3*x4")?);
    let base = support_from_columns(&columns)?;

    let duals = [parse_function("anf:4:x1*x3+x2*x4")?, parse_function("anf:4:x1*x3+x2*x4+x1+x4+1")?];
    let fam: PlateauedFamily = disjoint_family(&base, &duals)?;
    for (i, (f, q)) in fam.members.iter().zip(&fam.shifts).enumerate() {
        println!("member {i}, shift {q}: {}", format_anf(f));
        println!("  support size {}", walsh_support(f).len());
    }

    let bent = concat_bent(&fam)?;
    println!("concatenation on {} variables: {}", bent.num_vars(), format_anf(&bent));
    println!("bent: {}", is_bent(&bent));
    Ok(())
}
