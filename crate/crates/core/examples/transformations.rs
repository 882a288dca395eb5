//! The rank-n transformation formulas behind the tableau sums.

use onerow::arith::{BigRat, Field};
use onerow::qseries::{verify_transform_II, verify_transform_III};

fn main() -> onerow::Result<()> {
    let q = BigRat::new(3.into(), 11.into());
    let t = BigRat::new(5.into(), 13.into());
    let mut checked = 0;
    for k in 0..=3 {
        for m in [[0, 0, 0], [1, 0, 2], [2, 2, 1]] {
            let d = verify_transform_II(3, k, &m, &q, &t)?;
            let c = verify_transform_III(3, k, &m, &q, &t)?;
            assert!(Field::is_zero(&d) && Field::is_zero(&c), "K={k} m={m:?}");
            checked += 2;
        }
    }
    println!("{checked} residuals vanish at q={q}, t={t}");
    Ok(())
}
