//! Codes over GF(4)+vGF(4): CRT components, the Gray map, Lee weights and
//! the [36,33,2] LCD skew 2-quasi-cyclic Gray image.

use skewlcd::codes::Inner;
use skewlcd::ring_r::{gray_map, lee_weight, r_code};
use skewlcd::{Field, Result, RingElem, SkewRing};

fn main() -> Result<()> {
    let f = Field::gf4();
    let x = RingElem::parse(&f, "w+v*w^2")?;
    let (u, z) = x.split();
    println!(
        "{x}: v-component {}, (1-v)-component {}",
        f.format(u),
        f.format(z)
    );
    let word = vec![x.clone(), RingElem::v(&f), RingElem::one(&f)];
    let image: Vec<String> = gray_map(&word).into_iter().map(|a| f.format(a)).collect();
    println!(
        "Phi{word:?} = ({}), Lee weight {}",
        image.join(", "),
        lee_weight(&word)
    );

    let ring = SkewRing::new(&f, 1);
    for (g1, g2) in [("x+w", "x^2+w*x+1"), ("x+w^2", "x^2+w^2*x+1")] {
        let c = r_code(
            &ring,
            18,
            f.one(),
            f.zero(),
            &ring.parse(g1)?,
            &ring.parse(g2)?,
        )?;
        println!(
            "g1 = {g1}, g2 = {g2}: Phi(C) = {}, |C| = 4^{}, LCD = {}, 2-quasi-cyclic = {}",
            c.gray_params(2)?,
            2 * c.n() - c.g1().deg() - c.g2().deg(),
            c.is_lcd(Inner::Euclidean)?,
            c.is_gray_quasi_cyclic()?
        );
    }
    Ok(())
}
