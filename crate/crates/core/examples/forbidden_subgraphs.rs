//! Graphs maximizing `rho_f` avoid six small induced subgraphs.

use fspectra::families::forbidden_fixtures;
use fspectra::search::{extremal, GraphClass, Objective};
use fspectra::weights::NamedWeight;
use fspectra::{Result, WeightSpec};

pub fn run_example() -> Result<()> {
    let fixtures = forbidden_fixtures();
    let names: Vec<String> = fixtures.iter().map(|(s, _)| s.to_string()).collect();
    println!("forbidden: {}", names.join(" "));
    let f = WeightSpec::Named(NamedWeight::Sombor);
    for class in [
        GraphClass::Trees,
        GraphClass::Unicyclic,
        GraphClass::Bicyclic,
    ] {
        for n in [7, 8] {
            let r = extremal(class, n, &f, Objective::Max)?;
            for w in &r.winners {
                let mut hits = Vec::new();
                for (spec, pattern) in &fixtures {
                    if w.graph.contains_induced(pattern)? {
                        hits.push(spec.to_string());
                    }
                }
                let base = match w.graph.base_graph() {
                    Ok(b) => fspectra::families::identify(&b).map_or("?".into(), |s| s.to_string()),
                    Err(_) => "-".into(),
                };
                println!(
                    "{class} n={n}: {} rho={:.6} base={base} induced forbidden: {}",
                    w.family_tag(),
                    w.rho,
                    if hits.is_empty() {
                        "none".to_string()
                    } else {
                        hits.join(",")
                    }
                );
            }
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
