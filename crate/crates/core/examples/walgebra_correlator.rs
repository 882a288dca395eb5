//! Correlation functions of the deformed W algebra reproduce P_(r).

use onerow::arith::Scalar;
use onerow::macdonald::Base;
use onerow::tableaux::Family;
use onerow::walgebra::{gamma_pair, phi_principal, phi_support, soukan_residual, GammaTable, PhiConfig, Words};

fn main() -> onerow::Result<()> {
    let b = Base::<Scalar>::symbolic();

    let gt = GammaTable::new(Family::C, 2, b.q.clone(), b.t.clone());
    let z = Scalar::q().inv()?;
    println!("gamma between letters 1 and 1bar at z/w = 1/q: {}", gamma_pair(&gt, 0, 3, &z, &Scalar::one())?.to_text());

    let cfg = PhiConfig::default();
    for family in [Family::C, Family::D] {
        for r in 0..=3 {
            let zero = soukan_residual(&b, family, 2, r, cfg)?.is_zero();
            let words = phi_support(&b, family, 2, r, cfg)?.len();
            println!("{family}_2, r={r}: correlator = P_(r): {zero}, surviving words: {words}");
        }
    }

    let full = phi_principal(&b, Family::D, 2, 2, cfg)?;
    let fast = phi_principal(&b, Family::D, 2, 2, cfg.words(Words::Increasing))?;
    println!("all words and increasing words agree: {}", full == fast);
    Ok(())
}
