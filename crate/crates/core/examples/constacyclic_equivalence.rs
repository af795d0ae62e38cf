//! Scaling c_i -> delta^{-[i]} c_i turns skew cyclic codes of length 4 over
//! GF(16) into skew w^5-constacyclic codes with the same weights.

use skewlcd::codes::{lambda_roots, scale_equivalence, twisted_exponent};
use skewlcd::{ConstaModulus, Field, Result, SkewConstaCode, SkewRing};

fn main() -> Result<()> {
    let ring = SkewRing::new(&Field::gf16(), 2);
    let f = ring.field().clone();
    let n = 4;
    println!(
        "[i] mod 15 for i = 0..4: {:?}",
        (0..=n)
            .map(|i| twisted_exponent(&f, 2, i))
            .collect::<Vec<_>>()
    );

    let cyclic = ConstaModulus::new(&ring, n, f.one())?;
    let code = SkewConstaCode::from_generator_poly(&cyclic, &ring.parse("x^2+w*x+w^6")?)?;
    let target = f.gen_pow(5);
    let mut roots = lambda_roots(&f, 2, n, target);
    roots.sort_by_key(|&d| f.gen_log(d));
    println!(
        "delta with delta^[4] = w^5: {:?}",
        roots.iter().map(|&d| f.format(d)).collect::<Vec<_>>()
    );
    for delta in roots {
        let image = scale_equivalence(&code, delta)?;
        let d = image.code().min_distance_bounded(n)?;
        println!(
            "  delta = {:>4}: <{}> is skew {}-constacyclic, d = {d}, shift-closed = {}",
            f.format(delta),
            image.generator_poly(),
            f.format(image.lambda()),
            image.is_closed_under_shift()
        );
    }
    Ok(())
}
