//! Spectral radii of small Θ and ∞* graphs under a three-entry weight table.
//!
//! Run with `cargo run --example table_weight`.

use fspectra::spectral::rho_f;
use fspectra::{FamilySpec, Result, WeightSpec};

/// Reference values, to four decimals, for the table weight below.
pub const EXPECTED: [(FamilySpec, f64); 10] = [
    (FamilySpec::InftyStar(3, 3), 4.5311),
    (FamilySpec::Theta(2, 2, 2), 4.8990),
    (FamilySpec::InftyStar(4, 3), 4.3914),
    (FamilySpec::Theta(3, 2, 2), 4.5949),
    (FamilySpec::InftyStar(4, 4), 4.2426),
    (FamilySpec::Theta(3, 3, 2), 4.2930),
    (FamilySpec::InftyStar(5, 4), 4.2028),
    (FamilySpec::Theta(3, 3, 3), 4.0000),
    (FamilySpec::InftyStar(5, 5), 4.1613),
    (FamilySpec::Theta(4, 3, 3), 3.9169),
];

pub fn run_example() -> Result<()> {
    let f: WeightSpec = "table:2,2=1;3,2=2;4,2=2".parse()?;
    println!("weight {f}");
    for (spec, expected) in EXPECTED {
        let rho = rho_f(&spec.build()?, &f)?;
        println!(
            "{spec:<16} rho = {rho:.6}  (expected {expected:.4}, diff {:+.1e})",
            rho - expected
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
