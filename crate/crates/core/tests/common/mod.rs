#![allow(dead_code)]

use std::collections::BTreeSet;

use fspectra::weights::NamedWeight;
use fspectra::{Graph, WeightSpec};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph on `n` vertices: a random labelled tree plus up to `extra` random edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let g = Graph::new(n, edges).expect("valid edge list");
    g.relabel(&perm).expect("permutation")
}

pub fn named(w: NamedWeight) -> WeightSpec {
    WeightSpec::Named(w)
}

/// Named weights that are increasing and convex in `x`.
pub fn increasing_convex() -> Vec<WeightSpec> {
    vec![
        named(NamedWeight::Sombor),
        named(NamedWeight::Zagreb1),
        named(NamedWeight::Zagreb2),
        WeightSpec::constant(1.0).unwrap(),
    ]
}

/// Named weights that are increasing in `x`.
pub fn increasing() -> Vec<WeightSpec> {
    let mut v = increasing_convex();
    v.push(named(NamedWeight::RecipRandic));
    v
}
