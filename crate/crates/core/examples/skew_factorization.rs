//! Skew polynomial arithmetic: non-commutative products, right division,
//! gcrd, and the monic right divisors of x^n - lambda.

use skewlcd::skewpoly::DEFAULT_BUDGET;
use skewlcd::{ConstaModulus, Field, Result, SkewRing};

fn main() -> Result<()> {
    let ring = SkewRing::new(&Field::gf16(), 2);
    let f = ring.field();
    let x = ring.x_pow(1);
    let w = ring.constant(f.generator());
    println!("x*w = {}   w*x = {}", &x * &w, &w * &x);

    let g = ring.parse("x^2+w*x+w^6")?;
    let h = ring.parse("x^2+w*x+w^9")?;
    println!("({h})({g}) = {}", &h * &g);
    let (q, r) = ring.xn_minus(4, f.one()).right_divmod(&g)?;
    println!("(x^4-1) / ({g}) = {q} rem {r}");
    println!("gcrd({g}, x+w^3) = {}", g.gcrd(&ring.parse("x+w^3")?)?);

    let modulus = ConstaModulus::new(&ring, 4, f.one())?;
    println!("x^4-1 central: {}", modulus.is_central());
    for d in 0..=4 {
        let divisors = modulus.right_divisors(d, DEFAULT_BUDGET)?;
        println!("degree {d}: {} monic right divisors", divisors.len());
    }

    let r9 = SkewRing::new(&Field::gf9(), 1);
    let m = ConstaModulus::new(&r9, 10, r9.field().from_int(-1))?;
    println!("\nx^10+1 over GF(9), degree-4 right divisors:");
    for g in m.right_divisors(4, DEFAULT_BUDGET)? {
        println!("  {g}  with cofactor {}", m.poly().right_divmod(&g)?.0);
    }
    Ok(())
}
