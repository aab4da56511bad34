use super::Graph;
use crate::error::{Error, Result};

/// Largest host order accepted by [`Graph::contains_induced`].
pub const INDUCED_LIMIT: usize = 16;

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    /// pattern vertices in the order they are assigned
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        for h in 0..self.host.order() {
            if self.used[h] || self.host.degree(h) < self.pattern.degree(p) {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&q| self.pattern.has_edge(p, q) == self.host.has_edge(h, self.map[q]));
            if !consistent {
                continue;
            }
            self.map[p] = h;
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[h] = false;
        }
        false
    }
}

/// Pattern vertices ordered so that each one (after the first of its component) is
/// adjacent to an earlier one, which makes adjacency constraints bite early.
fn assignment_order(pattern: &Graph) -> Vec<usize> {
    let mut seen = vec![false; pattern.order()];
    let mut order = Vec::with_capacity(pattern.order());
    let mut roots: Vec<usize> = (0..pattern.order()).collect();
    roots.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    for r in roots {
        if seen[r] {
            continue;
        }
        for v in pattern.bfs_order(r) {
            seen[v] = true;
            order.push(v);
        }
    }
    order
}

impl Graph {
    /// True if some vertex subset of `self` induces a graph isomorphic to `pattern`.
    pub fn contains_induced(&self, pattern: &Graph) -> Result<bool> {
        if self.order() > INDUCED_LIMIT {
            return Err(Error::SizeLimit {
                n: self.order(),
                limit: INDUCED_LIMIT,
            });
        }
        if pattern.order() > self.order() {
            return Ok(false);
        }
        let mut m = Matcher {
            host: self,
            pattern,
            order: assignment_order(pattern),
            map: vec![usize::MAX; pattern.order()],
            used: vec![false; self.order()],
        };
        Ok(m.extend(0))
    }
}
