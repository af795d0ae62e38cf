//! Sweeps divisor pairs over GF(4)+vGF(4) for LCD codes with good Gray
//! images and merges them into a JSON catalog.

use skewlcd::catalog::Catalog;
use skewlcd::cli::{cmd_search, SearchParams};
use skewlcd::codes::Inner;
use skewlcd::skewpoly::DEFAULT_BUDGET;
use skewlcd::{Field, Result, SkewRing};

fn main() -> Result<()> {
    let f = Field::gf4();
    let ring = SkewRing::new(&f, 1);
    let path = std::env::temp_dir().join("skewlcd-example-catalog.json");
    let _ = std::fs::remove_file(&path);
    for n in [6, 10] {
        let params = SearchParams {
            n,
            alpha: f.one(),
            beta: f.zero(),
            degrees: 0..=1,
            inner: Inner::Euclidean,
            w_max: 3,
            budget: DEFAULT_BUDGET,
        };
        let report = cmd_search(&ring, &params, Some(&path))?;
        println!(
            "n = {n}: {} pairs, {} LCD codes, {} new",
            report.pairs_checked,
            report.found.len(),
            report.added
        );
    }
    let catalog = Catalog::load(&path)?;
    for e in catalog.entries() {
        let [len, k, d] = e.gray_params;
        println!(
            "  [{len}, {k}, {d}]  g1 = {:<8} g2 = {:<8} {}",
            e.g1,
            e.g2,
            &e.hash[..12]
        );
    }
    std::fs::remove_file(&path)?;
    Ok(())
}
