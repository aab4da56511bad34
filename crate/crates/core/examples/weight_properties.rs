//! Grid checks of the weight properties the extremal results depend on.

use fspectra::weights::{check_property, Property};
use fspectra::{Result, WeightSpec};

pub fn run_example() -> Result<()> {
    let props = [
        Property::IncreasingInX { strict: false },
        Property::ConvexInX,
        Property::PStar,
        Property::PStarStar,
    ];
    for f in WeightSpec::all_named()
        .into_iter()
        .chain([WeightSpec::constant(1.0)?])
    {
        let mut cells = Vec::new();
        for p in props {
            match check_property(&f, p, 10) {
                Ok(r) if r.holds => cells.push(format!("{p}=yes")),
                Ok(r) => cells.push(format!(
                    "{p}=no [{}]",
                    r.witness.map(|w| w.to_string()).unwrap_or_default()
                )),
                Err(e) => cells.push(format!("{p}=undefined [{e}]")),
            }
        }
        println!("{f}: {}", cells.join("  "));
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
