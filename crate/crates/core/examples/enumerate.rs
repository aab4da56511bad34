//! Isomorph-free enumeration of connected graphs by cyclomatic number.

use fspectra::search::{enumerate_connected, enumerate_pendant_free_bicyclic};
use fspectra::Result;

pub fn run_example() -> Result<()> {
    println!("n\ttrees\tunicyclic\tbicyclic\tpendant-free bicyclic");
    for n in 4..=8 {
        let count = |c: usize| enumerate_connected(n, n - 1 + c).map(|v| v.len());
        println!(
            "{n}\t{}\t{}\t{}\t{}",
            count(0)?,
            count(1)?,
            count(2)?,
            enumerate_pendant_free_bicyclic(n).len()
        );
    }
    let specs: Vec<String> = enumerate_pendant_free_bicyclic(6)
        .iter()
        .map(|s| s.to_string())
        .collect();
    println!("pendant-free bicyclic, n = 6: {}", specs.join(" "));
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
