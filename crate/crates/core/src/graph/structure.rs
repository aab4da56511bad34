use super::{Edge, Graph};
use crate::error::{Error, Result};

/// A maximal path `v_0 .. v_l` whose ends have degree at least 3 and whose
/// interior vertices all have degree 2. `closed` paths start and end at the same vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalPath {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl InternalPath {
    /// Number of edges on the path.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("non-empty path")
    }

    /// Edges `e_1 .. e_l` in path order, each as `(v_{i-1}, v_i)` (not normalized).
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

impl Graph {
    /// Vertices of the base graph: what remains after repeatedly deleting pendant vertices.
    pub fn base_vertices(&self) -> Result<Vec<usize>> {
        if self.cyclomatic_number()? == 0 {
            return Err(Error::NoCycle);
        }
        let mut deg = self.degrees();
        let mut alive = vec![true; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] || deg[v] != 1 {
                continue;
            }
            alive[v] = false;
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        Ok((0..self.n).filter(|&v| alive[v]).collect())
    }

    /// The minimal subgraph with the same cyclomatic number, relabeled in increasing vertex order.
    pub fn base_graph(&self) -> Result<Graph> {
        Ok(self.induced(&self.base_vertices()?))
    }

    /// All maximal internal paths, each reported once.
    ///
    /// Walks that run into a pendant vertex are not internal paths and are dropped.
    pub fn internal_paths(&self) -> Vec<InternalPath> {
        let mut out = Vec::new();
        for v0 in 0..self.n {
            if self.degree(v0) < 3 {
                continue;
            }
            for &first in &self.adj[v0] {
                let mut walk = vec![v0, first];
                let (mut prev, mut cur) = (v0, first);
                while self.degree(cur) == 2 && cur != v0 {
                    let next = if self.adj[cur][0] == prev {
                        self.adj[cur][1]
                    } else {
                        self.adj[cur][0]
                    };
                    walk.push(next);
                    prev = cur;
                    cur = next;
                }
                if self.degree(cur) < 3 {
                    continue;
                }
                let end = cur;
                let penultimate = walk[walk.len() - 2];
                // each path is found from both ends; keep the lexicographically smaller direction
                if (v0, first) > (end, penultimate) {
                    continue;
                }
                out.push(InternalPath {
                    closed: v0 == end,
                    vertices: walk,
                });
            }
        }
        out
    }

    /// Cycles of a fundamental basis (one per non-tree edge of a BFS forest), as vertex sequences.
    pub fn fundamental_cycles(&self) -> Vec<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        let mut tree_edges = std::collections::BTreeSet::<Edge>::new();
        for root in 0..self.n {
            if parent[root] != usize::MAX {
                continue;
            }
            parent[root] = root;
            for u in self.bfs_order(root) {
                for &w in &self.adj[u] {
                    if parent[w] == usize::MAX {
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        tree_edges.insert(super::edge(u, w));
                    }
                }
            }
        }
        let mut cycles = Vec::new();
        for &(u, v) in &self.edges {
            if tree_edges.contains(&(u, v)) {
                continue;
            }
            let (mut a, mut b) = (u, v);
            let mut left = vec![a];
            let mut right = vec![b];
            while a != b {
                if depth[a] >= depth[b] {
                    a = parent[a];
                    left.push(a);
                } else {
                    b = parent[b];
                    right.push(b);
                }
            }
            // left ends at the common ancestor; right ends there too
            right.pop();
            right.reverse();
            left.extend(right);
            cycles.push(left);
        }
        cycles
    }
}
