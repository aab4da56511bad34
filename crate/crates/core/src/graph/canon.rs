//! Canonical labeling for small graphs.
//!
//! Individualize-and-refine search: colour refinement splits vertices by
//! iterated neighbourhood colour multisets, then each non-discrete cell is
//! branched on. Every discrete leaf yields an adjacency certificate and the
//! largest certificate wins. Cells whose vertices are pairwise twins are
//! branched on a single representative, since the transposition of two twins
//! is an automorphism fixing every earlier choice.

use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`Graph::canonical_form`].
pub const CANONICAL_LIMIT: usize = 12;

/// Upper-triangle bit count fits in a `u128` up to 16 vertices.
const BIT_LIMIT: usize = 16;

/// Isomorphism-invariant encoding: order plus the upper-triangle adjacency bits of the
/// canonically relabeled graph. Ordering is total, so it doubles as a deterministic sort key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: u128,
}

/// Bit position of pair `(i, j)`, `i < j`, with the first pair most significant.
fn bit_index(n: usize, i: usize, j: usize) -> usize {
    // column-major over the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    let rank = j * (j - 1) / 2 + i;
    let total = n * (n - 1) / 2;
    total - 1 - rank
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges of the canonical representative.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> bit_index(self.n, i, j) & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The canonical representative graph.
    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges()).expect("canonical edges are simple")
    }

    /// graph6 string of the canonical representative.
    pub fn graph6(&self) -> String {
        encode_graph6(self.n, |i, j| self.bits >> bit_index(self.n, i, j) & 1 == 1)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

/// Certificate for the labeling `order[position] = vertex`.
fn certificate(g: &Graph, order: &[usize]) -> u128 {
    let n = g.order();
    let mut pos = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    g.edges().iter().fold(0u128, |acc, &(u, v)| {
        let (i, j) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        acc | 1u128 << bit_index(n, i, j)
    })
}

/// Refines `colors` to the coarsest equitable partition finer than it. Colours are
/// dense ranks `0..k` assigned in a labeling-independent order.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = colors.len();
    let mut classes = {
        let mut c = colors.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        for v in 0..n {
            colors[v] = sorted.binary_search(&&sigs[v]).expect("signature present");
        }
        if sorted.len() == classes {
            break;
        }
        classes = sorted.len();
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.neighbors(u).iter().filter(|&&w| w != v);
    let b = g.neighbors(v).iter().filter(|&&w| w != u);
    a.eq(b)
}

fn search(g: &Graph, mut colors: Vec<usize>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut colors);
    let n = colors.len();
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        cells[colors[v]].push(v);
    }
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut order = vec![0usize; n];
        for v in 0..n {
            order[colors[v]] = v;
        }
        let cert = certificate(g, &order);
        if best.as_ref().is_none_or(|(b, _)| cert > *b) {
            *best = Some((cert, order));
        }
        return;
    };
    let cell = &cells[target];
    let all_twins = cell
        .iter()
        .enumerate()
        .all(|(i, &u)| cell[i + 1..].iter().all(|&v| twins(g, u, v)));
    let branches = if all_twins { &cell[..1] } else { &cell[..] };
    for &v in branches {
        // v moves ahead of the rest of its cell
        let next: Vec<usize> = (0..n)
            .map(|w| 2 * colors[w] + usize::from(w != v && colors[w] == target))
            .collect();
        search(g, next, best);
    }
}

/// graph6 encoding of an order-`n` graph given by its adjacency predicate on `i < j`.
fn encode_graph6(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> String {
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(adjacent(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push((v + 63) as char);
    }
    out
}

impl Graph {
    /// graph6 string of this labeled graph (orders below 2^18).
    pub fn graph6(&self) -> String {
        encode_graph6(self.order(), |i, j| self.has_edge(i, j))
    }

    /// A canonical labeling: `order[position] = vertex`.
    pub fn canonical_labeling(&self) -> Result<Vec<usize>> {
        if self.order() > CANONICAL_LIMIT {
            return Err(Error::SizeLimit {
                n: self.order(),
                limit: CANONICAL_LIMIT,
            });
        }
        let mut best = None;
        search(self, vec![0; self.order()], &mut best);
        Ok(best.map(|(_, order)| order).unwrap_or_default())
    }

    /// Encoding shared by exactly the graphs isomorphic to this one.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let order = self.canonical_labeling()?;
        debug_assert!(self.order() <= BIT_LIMIT);
        Ok(CanonicalForm {
            n: self.order(),
            bits: certificate(self, &order),
        })
    }

    /// The canonical representative of this graph's isomorphism class.
    pub fn canonical(&self) -> Result<Graph> {
        Ok(self.canonical_form()?.graph())
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        if self.order() != other.order() || self.size() != other.size() {
            return Ok(false);
        }
        let (mut a, mut b) = (self.degrees(), other.degrees());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::super::testutil::{connected_graph, permutation};
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: smallest relabeled edge list over all permutations.
    fn brute_form(g: &Graph) -> Vec<(usize, usize)> {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        loop {
            let e = g.relabel(&perm).unwrap().edges().to_vec();
            if best.as_ref().is_none_or(|b| e < *b) {
                best = Some(e);
            }
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| perm[i] < perm[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        best.unwrap_or_default()
    }

    #[test]
    fn relabeled_cycles_agree() {
        let a = cycle(5);
        let b = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(
            path(4).canonical_form().unwrap(),
            star(4).canonical_form().unwrap()
        );
    }

    #[test]
    fn theta123_and_bowtie_differ() {
        // Theta(1,2,3): hubs 0,1; paths 0-1, 0-2-1, 0-3-4-1
        let theta = Graph::new(5, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]).unwrap();
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            (theta.order(), theta.size()),
            (bowtie.order(), bowtie.size())
        );
        assert_ne!(brute_form(&theta), brute_form(&bowtie));
        assert_ne!(
            theta.canonical_form().unwrap(),
            bowtie.canonical_form().unwrap()
        );
    }

    #[test]
    fn dense_graphs_are_fast_enough() {
        let k = complete(12);
        assert_eq!(k.canonical_form().unwrap().edges().len(), 66);
        assert_eq!(Graph::empty(12).canonical_form().unwrap().edges().len(), 0);
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            path(13).canonical_form(),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn graph6_of_known_graphs() {
        // nauty's graph6 for the triangle is "Bw" and for K4 "C~"
        assert_eq!(cycle(3).canonical_form().unwrap().graph6(), "Bw");
        assert_eq!(complete(4).canonical_form().unwrap().graph6(), "C~");
        assert_eq!(path(3).graph6(), "Bg");
        assert!(Graph::empty(70).graph6().starts_with("~?@E"));
    }

    #[test]
    fn canonical_graph_is_isomorphic() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let c = g.canonical().unwrap();
        assert_eq!(brute_form(&c), brute_form(&g));
        assert_eq!(c.canonical_form().unwrap(), g.canonical_form().unwrap());
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(
            (g, perm) in connected_graph(1, 10, 12).prop_flat_map(|g| {
                let n = g.order();
                (Just(g), permutation(n))
            })
        ) {
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
        }

        #[test]
        fn agrees_with_brute_force(a in connected_graph(4, 6, 6), b in connected_graph(4, 6, 6)) {
            let same = a.order() == b.order() && brute_form(&a) == brute_form(&b);
            prop_assert_eq!(a.canonical_form().unwrap() == b.canonical_form().unwrap(), same);
        }
    }
}
