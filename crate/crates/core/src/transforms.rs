//! Edge subdivision and the Kelmans operation.

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, CANONICAL_LIMIT};
use crate::spectral;
use crate::weights::WeightSpec;

/// Replaces edge `uv` by the path `u - w - v` through a new vertex `w = n`.
pub fn subdivide(g: &Graph, e: Edge) -> Result<Graph> {
    let (u, v) = edge(e.0, e.1);
    if !g.has_edge(u, v) {
        return Err(Error::EdgeNotFound(e.0, e.1));
    }
    let w = g.order();
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&x| x != (u, v))
        .chain([(u, w), (w, v)]);
    Graph::new(w + 1, edges)
}

/// Result of a Kelmans operation.
#[derive(Debug, Clone, PartialEq)]
pub struct KelmansOutcome {
    pub graph: Graph,
    /// Neighbours `w` of `u` not adjacent to `v` whose edge moved from `u` to `v`.
    pub moved: Vec<usize>,
    /// `u ~ v` in the input; the increase is only guaranteed when they are not adjacent.
    pub adjacent: bool,
    pub connected: bool,
    /// `None` when the order is beyond the canonical-form limit.
    pub isomorphic: Option<bool>,
}

impl KelmansOutcome {
    /// Whether the spectral-radius increase increase guaranteed to this application.
    pub fn guarantees_increase(&self) -> bool {
        !self.adjacent && self.connected && self.isomorphic == Some(false)
    }
}

/// Replaces `uw` by `vw` for every `w` with `u ~ w` and `w !~ v` (`w != v`).
pub fn kelmans(g: &Graph, u: usize, v: usize) -> Result<KelmansOutcome> {
    if u == v || u >= g.order() || v >= g.order() {
        return Err(Error::BadParams(format!(
            "Kelmans operation needs two distinct vertices of the graph, got {u} and {v}"
        )));
    }
    let moved: Vec<usize> = g
        .neighbors(u)
        .iter()
        .copied()
        .filter(|&w| w != v && !g.has_edge(w, v))
        .collect();
    let edges = g.edges().iter().map(|&(a, b)| {
        if (a == u && moved.contains(&b)) || (b == u && moved.contains(&a)) {
            let w = if a == u { b } else { a };
            edge(v, w)
        } else {
            (a, b)
        }
    });
    let graph = Graph::new(g.order(), edges)?;
    let isomorphic = if g.order() <= CANONICAL_LIMIT {
        Some(g.is_isomorphic(&graph)?)
    } else {
        None
    };
    Ok(KelmansOutcome {
        connected: graph.is_connected(),
        adjacent: g.has_edge(u, v),
        graph,
        moved,
        isomorphic,
    })
}

/// Subdivision chosen on one cycle by the minimum of `y_i = f(d_i, 2) x_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleSubdivision {
    pub cycle: Vec<usize>,
    /// Cycle vertex minimizing `y`.
    pub vertex: usize,
    /// The cycle neighbour of `vertex` whose edge was subdivided.
    pub neighbor: usize,
    pub graph: Graph,
    pub rho_before: f64,
    pub rho_after: f64,
}

/// Shortest cycle of a fundamental basis; ties go to the lexicographically smallest vertex set.
pub fn choose_cycle(g: &Graph) -> Option<Vec<usize>> {
    g.fundamental_cycles().into_iter().min_by(|a, b| {
        let (mut sa, mut sb) = (a.clone(), b.clone());
        sa.sort_unstable();
        sb.sort_unstable();
        a.len().cmp(&b.len()).then(sa.cmp(&sb))
    })
}

/// Subdivides the cycle edge at the vertex with the smallest `f(d_i, 2) x_i`, where `x`
/// is the Perron vector of `A_f(G)`. For `f` increasing in `x` this never raises `rho_f`.
pub fn best_cycle_subdivision(g: &Graph, f: &WeightSpec) -> Result<CycleSubdivision> {
    let cycle = choose_cycle(g).ok_or(Error::NoCycle)?;
    let perron = spectral::perron_of(g, f)?;
    let mut best: Option<(f64, usize)> = None;
    for (pos, &v) in cycle.iter().enumerate() {
        let y = f.eval(g.degree(v), 2)? * perron.vector[v];
        // ties go to the smallest vertex index
        let better = match best {
            None => true,
            Some((by, bpos)) => y < by || (y == by && v < cycle[bpos]),
        };
        if better {
            best = Some((y, pos));
        }
    }
    let (_, pos) = best.expect("cycle is non-empty");
    let len = cycle.len();
    let vertex = cycle[pos];
    let neighbor = cycle[(pos + 1) % len].min(cycle[(pos + len - 1) % len]);
    let graph = subdivide(g, (vertex, neighbor))?;
    let rho_after = spectral::rho_f(&graph, f)?;
    Ok(CycleSubdivision {
        cycle,
        vertex,
        neighbor,
        graph,
        rho_before: perron.rho,
        rho_after,
    })
}

/// Edges `v_1 v_2` where `v_1` has degree 2 and its two neighbours are adjacent.
/// Subdividing any of them does not raise `rho_f` for `f` increasing in `x`.
pub fn triangle_corner_edges(g: &Graph) -> Vec<Edge> {
    let mut out = Vec::new();
    for v in 0..g.order() {
        if let [a, b] = *g.neighbors(v) {
            if g.has_edge(a, b) {
                out.push((v, a));
                out.push((v, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::testutil::connected_graph;
    use crate::weights::NamedWeight;
    use proptest::prelude::*;

    fn theta(a: usize, b: usize, c: usize) -> Graph {
        crate::families::FamilySpec::Theta(a, b, c).build().unwrap()
    }

    #[test]
    fn subdividing_cycle_edge() {
        let g = subdivide(&cycle(6), (2, 3)).unwrap();
        assert!(g.is_isomorphic(&cycle(7)).unwrap());
    }

    #[test]
    fn subdividing_theta_path() {
        let g = theta(2, 2, 2);
        let e = g.edges()[0];
        assert!(subdivide(&g, e)
            .unwrap()
            .is_isomorphic(&theta(3, 2, 2))
            .unwrap());
    }

    #[test]
    fn subdividing_k2_gives_p3() {
        assert_eq!(
            subdivide(&path(2), (1, 0)).unwrap(),
            Graph::new(3, [(0, 2), (2, 1)]).unwrap()
        );
        assert_eq!(subdivide(&path(3), (0, 2)), Err(Error::EdgeNotFound(0, 2)));
    }

    #[test]
    fn kelmans_with_nothing_to_move() {
        // N(0) \ {1} = {2} is inside N(1) = {2, 3}
        let g = Graph::new(4, [(0, 2), (1, 2), (1, 3)]).unwrap();
        let k = kelmans(&g, 0, 1).unwrap();
        assert!(k.moved.is_empty());
        assert_eq!(k.graph, g);
        assert_eq!(k.isomorphic, Some(true));
        assert!(!k.guarantees_increase());
    }

    #[test]
    fn kelmans_on_p5_raises_radius() {
        // a-b-c-d-e as 0-1-2-3-4; u = b, v = d
        let g = path(5);
        let k = kelmans(&g, 1, 3).unwrap();
        assert_eq!(k.moved, vec![0]);
        assert!(k.connected && !k.adjacent);
        assert_eq!(k.isomorphic, Some(false));
        assert_eq!(k.graph.degree(3), 3);
        for w in [
            NamedWeight::Sombor,
            NamedWeight::Zagreb1,
            NamedWeight::Zagreb2,
        ] {
            let f = WeightSpec::Named(w);
            assert!(spectral::rho_f(&k.graph, &f).unwrap() > spectral::rho_f(&g, &f).unwrap());
        }
    }

    #[test]
    fn kelmans_can_disconnect() {
        // 0-1-2-3 with u = 0, v = 3: edge 01 becomes 31 and 0 is isolated
        let k = kelmans(&path(4), 0, 3).unwrap();
        assert_eq!(k.moved, vec![1]);
        assert_eq!(k.graph.edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert!(!k.connected);
        assert!(!k.adjacent);
        assert!(!k.guarantees_increase());
    }

    #[test]
    fn kelmans_on_adjacent_pair() {
        // 0-1-2 with u = 1, v = 0: edge 12 becomes 02
        let k = kelmans(&path(3), 1, 0).unwrap();
        assert_eq!(k.graph.edges(), &[(0, 1), (0, 2)]);
        assert!(k.adjacent && k.connected);
        assert_eq!(k.isomorphic, Some(true));
    }

    #[test]
    fn kelmans_rejects_same_vertex() {
        assert!(kelmans(&path(3), 1, 1).is_err());
        assert!(kelmans(&path(3), 1, 7).is_err());
    }

    #[test]
    fn best_subdivision_on_cycle() {
        let f = WeightSpec::Named(NamedWeight::Sombor);
        let s = best_cycle_subdivision(&cycle(5), &f).unwrap();
        assert!(s.graph.is_isomorphic(&cycle(6)).unwrap());
        assert!((s.rho_after - s.rho_before).abs() < 1e-10);
    }

    #[test]
    fn best_subdivision_triangle_with_pendant() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let s = best_cycle_subdivision(&g, &WeightSpec::Named(NamedWeight::Sombor)).unwrap();
        assert!(s.rho_after <= s.rho_before + 1e-8);
        assert_ne!(s.vertex, 0, "the branch vertex carries the largest entry");
    }

    #[test]
    fn best_subdivision_theta() {
        let f = WeightSpec::Named(NamedWeight::Zagreb1);
        let s = best_cycle_subdivision(&theta(2, 2, 2), &f).unwrap();
        assert!(s.graph.is_isomorphic(&theta(3, 2, 2)).unwrap());
        assert!(s.rho_after <= s.rho_before + 1e-8);
    }

    #[test]
    fn best_subdivision_needs_a_cycle() {
        assert_eq!(
            best_cycle_subdivision(&path(4), &WeightSpec::Named(NamedWeight::Sombor))
                .map(|s| s.vertex),
            Err(Error::NoCycle)
        );
    }

    #[test]
    fn triangle_corners() {
        let corners = triangle_corner_edges(&cycle(3));
        assert_eq!(corners.len(), 6);
        assert!(triangle_corner_edges(&cycle(4)).is_empty());
    }

    proptest! {
        #[test]
        fn subdivision_keeps_cyclomatic_number(g in connected_graph(2, 10, 6), k in 0usize..64) {
            let e = g.edges()[k % g.size()];
            let h = subdivide(&g, e).unwrap();
            prop_assert_eq!((h.order(), h.size()), (g.order() + 1, g.size() + 1));
            prop_assert!(h.is_connected());
            prop_assert_eq!(h.cyclomatic_number().unwrap(), g.cyclomatic_number().unwrap());
        }

        #[test]
        fn kelmans_preserves_size(g in connected_graph(3, 9, 6), u in 0usize..9, v in 0usize..9) {
            let (u, v) = (u % g.order(), v % g.order());
            if u != v {
                let k = kelmans(&g, u, v).unwrap();
                prop_assert_eq!(k.graph.size(), g.size());
            }
        }
    }
}
