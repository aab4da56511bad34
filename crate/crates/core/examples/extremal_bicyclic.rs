//! Bicyclic graphs with the smallest `rho_f`: the pendant-free search against the
//! exhaustive search over all connected graphs with one more edge than vertices.

use fspectra::search::{extremal, GraphClass, Objective};
use fspectra::weights::NamedWeight;
use fspectra::{Result, WeightSpec};

pub fn run_example() -> Result<()> {
    for w in [NamedWeight::Sombor, NamedWeight::Abc, NamedWeight::Zagreb1] {
        let f = WeightSpec::Named(w);
        for n in 8..=10 {
            let r = extremal(GraphClass::PendantFreeBicyclic, n, &f, Objective::Min)?;
            let tags: Vec<String> = r.winners.iter().map(|e| e.family_tag()).collect();
            println!("{f} n={n}: min {:.6} at {}", r.value, tags.join(" and "));
        }
        let full = extremal(GraphClass::Bicyclic, 8, &f, Objective::Min)?;
        let tags: Vec<String> = full.winners.iter().map(|e| e.family_tag()).collect();
        println!(
            "{f} n=8 over all {} bicyclic graphs: min {:.6} at {}",
            full.examined,
            full.value,
            tags.join(" and ")
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
