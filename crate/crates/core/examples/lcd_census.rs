//! Closed-form counts of LCD skew cyclic and negacyclic codes of dimension
//! n/2 over GF(p^2) and GF(p^2)+vGF(p^2), checked against exhaustive search.

use skewlcd::census::{
    base_count, brute_force_census, brute_force_r_census, r_count, CensusInput, Variant,
    ORACLE_BUDGET,
};
use skewlcd::codes::Inner;
use skewlcd::{RLambda, Result};

fn main() -> Result<()> {
    for (p, n) in [(3, 2), (3, 4), (2, 4), (5, 2)] {
        let input = CensusInput::new(p, n)?;
        for v in Variant::ALL {
            let formula = base_count(&input, v)?;
            let oracle = brute_force_census(&input, v, ORACLE_BUDGET)?;
            println!(
                "p={p} n={n} {:<14} formula {formula:>3}  oracle {oracle:>3}",
                v.to_string()
            );
        }
    }
    let input = CensusInput::new(3, 4)?;
    for inner in Inner::ALL {
        for l in RLambda::ALL {
            let formula = r_count(&input, l, inner)?;
            let oracle = brute_force_r_census(&input, l, inner, ORACLE_BUDGET)?;
            println!("R, p=3 n=4 {inner} lambda={l:<5} formula {formula:>3}  oracle {oracle:>3}");
        }
    }
    Ok(())
}
