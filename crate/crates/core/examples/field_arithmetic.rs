//! Arithmetic in GF(16) and GF(9) with the explicit moduli used throughout,
//! Frobenius twists, fixed subfields and checked element wrappers.

use skewlcd::gf::ArithOp;
use skewlcd::{Field, FieldElem, Result};

fn main() -> Result<()> {
    let f16 = Field::gf16();
    println!("{f16}");
    let w = f16.generator();
    println!("w^15 = {}", f16.format(f16.pow(w, 15)));
    println!("w^5 + w^10 = {}", f16.format(f16.parse_elem("w^5+w^10")?));
    println!("theta_2(w) = w^4 = {}", f16.format(f16.frobenius(w, 2)));
    let fixed: Vec<String> = f16
        .fixed_subfield(2)
        .into_iter()
        .map(|a| f16.format(a))
        .collect();
    println!("fixed field of theta_2: {{{}}}", fixed.join(", "));

    let f9 = Field::gf9();
    println!("\n{f9}");
    let a = FieldElem::parse(&f9, "w")?;
    let b = FieldElem::parse(&f9, "2*w+1")?;
    println!("w * (2w+1) = {}", a.arith(ArithOp::Mul, &b)?);
    println!("w^-1 = {}", a.arith(ArithOp::Inv, &a)?);
    println!("conj(w) = w^3 = {}", f9.format(f9.conj(f9.generator())?));

    let zero = FieldElem::parse(&f9, "0")?;
    println!("1/0 -> {}", a.arith(ArithOp::Div, &zero).unwrap_err());
    let other = FieldElem::parse(&f16, "w")?;
    println!(
        "mixing fields -> {}",
        a.arith(ArithOp::Add, &other).unwrap_err()
    );
    Ok(())
}
