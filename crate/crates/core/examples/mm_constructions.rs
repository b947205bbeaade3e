//! Maiorana-McFarland based constructions: random supports with MM duals,
//! the D and C variants, and a dual taken from a vectorial bent map.

use plateaued::bits::{BinaryMatrix, BitVector};
use plateaued::construct::{construct_thm42, construct_thm43, Thm41, Thm42Variant, VectorialBent};
use plateaued::{classify_plateaued, format_anf};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> plateaued::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (k, s) in [(2, 1), (2, 2), (3, 1)] {
        let c = Thm41::random(k, s, &mut rng).construct()?;
        println!("random MM support, n = {}: {}", 2 * k + s, classify_plateaued(&c.function));
    }

    let psi: Vec<u32> = (0..4).collect();
    let d = Thm42Variant::D { e1: vec!["10".parse()?], e2: vec!["01".parse()?] };
    let f = construct_thm42(&psi, &d, &BitVector::zero(4), &BinaryMatrix::identity(4))?.function;
    println!("D variant: {} ({})", format_anf(&f), classify_plateaued(&f));
    let c = Thm42Variant::C { l: vec!["11".parse()?] };
    let f = construct_thm42(&psi, &c, &BitVector::zero(4), &BinaryMatrix::identity(4))?.function;
    println!("C variant: {} ({})", format_anf(&f), classify_plateaued(&f));

    let h = VectorialBent::mm(&[0, 1, 3, 2], 2)?;
    let f = construct_thm43(&h, 1, &[], &[2], &BitVector::zero(4), &BinaryMatrix::identity(4))?.function;
    println!("vectorial dual: {} ({})", format_anf(&f), classify_plateaued(&f));
    Ok(())
}
