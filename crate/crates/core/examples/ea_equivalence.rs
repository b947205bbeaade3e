//! EA-equivalence on small inputs: a certified witness for one pair, a
//! fingerprint separation for another.

use plateaued::classify::DEFAULT_BUDGET;
use plateaued::{ea_equivalent_small, ea_fingerprint, parse_function, EaVerdict};

fn main() -> plateaued::Result<()> {
    let pairs = [
        ("anf:x1*x3+x2*x4+x5", "anf:x1*x3+x2*x4+x2*x5+x3*x5+x4*x5+x1+x4"),
        (
            "anf:x1*x2*x5+x1*x3+x2*x4+x5",
            "anf:x1*x2*x5+x3*x4*x5+x1*x3+x1*x4+x2*x4+x2*x5+x3*x4+x4*x5+x3+x4+x5",
        ),
    ];
    for (a, b) in pairs {
        let (f, h) = (parse_function(a)?, parse_function(b)?);
        println!("f = {a}\nh = {b}");
        match ea_equivalent_small(&f, &h, DEFAULT_BUDGET) {
            EaVerdict::Equivalent(w) => {
                println!("  equivalent: h(x) = f(xA + {}) + {}.x + {}", w.b, w.c, w.eps as u8);
                for r in 0..w.a.rows() {
                    println!("    {}", w.a.row(r));
                }
            }
            EaVerdict::Inequivalent(reason) => {
                println!("  inequivalent: {reason}");
                let (ff, fh) = (ea_fingerprint(&f), ea_fingerprint(&h));
                println!("  support ranks {} and {}", ff.support_rank, fh.support_rank);
            }
            EaVerdict::Inconclusive(reason) => println!("  inconclusive: {reason}"),
        }
    }
    Ok(())
}
