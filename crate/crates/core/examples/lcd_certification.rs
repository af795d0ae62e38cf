//! Three independent LCD tests (gcrd, hull dimension, Gram matrix) on skew
//! cyclic codes over GF(9), and a divisor that fails with its certificate.

use skewlcd::codes::Inner;
use skewlcd::skewpoly::DEFAULT_BUDGET;
use skewlcd::{ConstaModulus, Field, Result, SkewConstaCode, SkewRing};

fn main() -> Result<()> {
    let ring = SkewRing::new(&Field::gf9(), 1);
    let f = ring.field();
    let m = ConstaModulus::new(&ring, 10, f.one())?;

    let code = SkewConstaCode::from_generator_poly(&m, &ring.parse("x^4+w*x^2+1")?)?;
    for inner in Inner::ALL {
        println!(
            "<{}> {inner}: gcrd = {}, hull dim = {}, Gram nonsingular = {}",
            code.generator_poly(),
            code.lcd_gcrd(inner)?,
            code.code().hull_dim(inner)?,
            code.code().is_lcd_matrix(inner)?
        );
    }
    let dual = code.dual_code()?;
    println!("dual generator: {}", dual.generator_poly());

    // first divisor of x^10-1 that is not euclidean LCD
    for d in 1..10 {
        let hit = m
            .right_divisors(d, DEFAULT_BUDGET)?
            .into_iter()
            .find_map(|g| {
                let c = SkewConstaCode::from_generator_poly(&m, &g).ok()?;
                (!c.is_skew_lcd(Inner::Euclidean).ok()?).then_some(c)
            });
        if let Some(c) = hit {
            println!(
                "not LCD: <{}>, certificate gcrd = {}, hull dim = {}",
                c.generator_poly(),
                c.lcd_gcrd(Inner::Euclidean)?,
                c.code().hull_dim(Inner::Euclidean)?
            );
            break;
        }
    }
    Ok(())
}
