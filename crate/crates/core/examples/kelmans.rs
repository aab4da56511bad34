//! The Kelmans operation moves the private neighbours of `u` to `v`; for weights
//! increasing and convex in `x` it raises `rho_f` unless the result is isomorphic.

use fspectra::graph::named::path;
use fspectra::spectral::rho_f;
use fspectra::transforms::kelmans;
use fspectra::weights::NamedWeight;
use fspectra::{FamilySpec, Graph, Result, WeightSpec};

pub fn run_example() -> Result<()> {
    let f = WeightSpec::Named(NamedWeight::Sombor);
    let cases: [(&str, Graph, usize, usize); 3] = [
        ("P5", path(5), 1, 3),
        ("C3.P3", FamilySpec::C3DotP3.build()?, 3, 1),
        ("theta:2,2,2", FamilySpec::Theta(2, 2, 2).build()?, 2, 3),
    ];
    for (name, g, u, v) in cases {
        let k = kelmans(&g, u, v)?;
        println!(
            "{name} u={u} v={v}: moved {:?}, increase guaranteed={}, rho {:.6} -> {:.6}",
            k.moved,
            k.guarantees_increase(),
            rho_f(&g, &f)?,
            rho_f(&k.graph, &f)?
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
