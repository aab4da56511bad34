//! Maximizers for weights favouring balanced degree pairs, next to the conjectured
//! double star and pendant families. Small orders only; nothing here is asserted.

use fspectra::search::{verify_theorem, GraphClass, Theorem, TheoremParams};
use fspectra::weights::NamedWeight;
use fspectra::{Result, WeightSpec};

pub fn run_example() -> Result<()> {
    let params = TheoremParams {
        n: 6..=8,
        classes: vec![
            GraphClass::Trees,
            GraphClass::Unicyclic,
            GraphClass::Bicyclic,
        ],
        ..Theorem::Conjecture.default_params()
    };
    let weights = [
        WeightSpec::Named(NamedWeight::Zagreb2),
        WeightSpec::Named(NamedWeight::RecipRandic),
    ];
    print!(
        "{}",
        verify_theorem(Theorem::Conjecture, &params, &weights)?
    );
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
