//! Edge subdivision: the cycle-edge choice that never raises `rho_f`, and eigenvalue
//! interlacing between a graph and its subdivision.

use fspectra::spectral::interlacing_check;
use fspectra::transforms::{best_cycle_subdivision, triangle_corner_edges};
use fspectra::weights::NamedWeight;
use fspectra::{FamilySpec, Result, WeightSpec};

pub fn run_example() -> Result<()> {
    let f = WeightSpec::Named(NamedWeight::Zagreb1);
    for spec in [
        FamilySpec::Theta(2, 2, 2),
        FamilySpec::C3Pendants(2, 1, 0),
        FamilySpec::Infty(3, 4, 1),
    ] {
        let g = spec.build()?;
        let s = best_cycle_subdivision(&g, &f)?;
        println!(
            "{spec}: cycle {:?}, subdivide {}-{}, rho {:.6} -> {:.6}",
            s.cycle, s.vertex, s.neighbor, s.rho_before, s.rho_after
        );
        let corners = triangle_corner_edges(&g);
        if let Some(&e) = corners.first() {
            let r = interlacing_check(&g, e, &f)?;
            println!(
                "  corner edge {e:?}: interlacing holds={} (worst margin {:.2e})",
                r.holds, r.worst_margin
            );
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
