//! Simple undirected graphs.
//!
//! Text format: a header line `n m` followed by `m` lines `u v` with 0-based
//! vertex indices. Blank lines and whitespace layout are not significant.

mod canon;
mod induced;
mod structure;

pub use canon::{CanonicalForm, CANONICAL_LIMIT};
pub use induced::INDUCED_LIMIT;
pub use structure::InternalPath;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An unordered vertex pair stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Normalizes a vertex pair to `(min, max)`.
pub fn edge(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted, adjacency lists are sorted and always agree with the edge set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::BadGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::BadGraph(format!("loop at vertex {u}")));
            }
            if !set.insert(edge(u, v)) {
                return Err(Error::BadGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of `edge(u, v)` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_order(0).len() == self.n
    }

    /// Vertices reachable from `root` in BFS order.
    pub(crate) fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// `|E| - n + 1`; defined for connected graphs only.
    pub fn cyclomatic_number(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((self.size() + 1).saturating_sub(self.n))
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| edge(pos[u], pos[v]));
        let set: BTreeSet<Edge> = edges.collect();
        Self::from_sorted(vertices.len(), set.into_iter().collect())
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut check = vec![false; self.n];
        if perm.len() != self.n
            || perm
                .iter()
                .any(|&p| p >= self.n || std::mem::replace(&mut check[p], true))
        {
            return Err(Error::BadParams("relabeling is not a permutation".into()));
        }
        let set: BTreeSet<Edge> = self
            .edges
            .iter()
            .map(|&(u, v)| edge(perm[u], perm[v]))
            .collect();
        Ok(Self::from_sorted(self.n, set.into_iter().collect()))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::BadGraph(format!("`{t}` is not a vertex index")))
        });
        let mut next = |what: &str| {
            tokens.next().unwrap_or_else(|| {
                Err(Error::BadGraph(format!(
                    "unexpected end of input, expected {what}"
                )))
            })
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = next("edge endpoint")?;
            let v = next("edge endpoint")?;
            edges.push((u, v));
        }
        if tokens.next().is_some() {
            return Err(Error::BadGraph(format!("more than the declared {m} edges")));
        }
        Graph::new(n, edges)
    }
}

/// Small named graphs.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
            .expect("complete graph is simple")
    }

    pub fn star(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (0, i))).expect("star is simple")
    }
}
