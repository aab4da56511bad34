//! Named graph families.
//!
//! Vertex labels are fixed: branch vertices first, then path or cycle
//! interiors in parameter order, then pendant vertices.
//!
//! Spec strings: `path:n | cycle:n | star:n | double-star:a,b | theta:l1,l2,l3 |
//! infty:l1,l2,l3 | infty-star:l1,l2 | c3:s,t,r | c4:s,t,r,q | theta122:a,b |
//! sn+e:n | c3-dot-p3 | k5-minus-p4`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// `K_{1, n-1}` on `n` vertices.
    Star(usize),
    /// Two adjacent centres carrying `a - 1` and `b - 1` leaves; `a + b` vertices.
    DoubleStar(usize, usize),
    /// Two branch vertices joined by three internally disjoint paths.
    Theta(usize, usize, usize),
    /// Cycles `C_l1` and `C_l2` joined by a path of length `l3`.
    Infty(usize, usize, usize),
    /// Cycles `C_l1` and `C_l2` sharing one vertex.
    InftyStar(usize, usize),
    /// Triangle with `s`, `t`, `r` pendant edges on its vertices.
    C3Pendants(usize, usize, usize),
    /// 4-cycle with pendant edges on its vertices, in cycle order.
    C4Pendants(usize, usize, usize, usize),
    /// `Theta(1,2,2)` with `a` and `b` pendant edges on its two degree-3 vertices.
    Theta122Pendants(usize, usize),
    /// Star `S_n` with one extra edge between two leaves.
    SnPlusE(usize),
    /// Triangle with a pendant path of length 2.
    C3DotP3,
    /// `K_5` minus the three edges of a path on four vertices.
    K5MinusP4,
}

struct Builder {
    n: usize,
    edges: Vec<Edge>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            n,
            edges: Vec::new(),
        }
    }

    fn fresh(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Path of `len` edges from `a` to `b` through fresh interior vertices.
    fn path_between(&mut self, a: usize, b: usize, len: usize) {
        let mut prev = a;
        for _ in 1..len {
            let w = self.fresh();
            self.edges.push((prev, w));
            prev = w;
        }
        self.edges.push((prev, b));
    }

    fn pendants(&mut self, at: usize, count: usize) {
        for _ in 0..count {
            let w = self.fresh();
            self.edges.push((at, w));
        }
    }

    fn finish(self) -> Result<Graph> {
        Graph::new(self.n, self.edges)
    }
}

impl FamilySpec {
    fn bad(&self, reason: &str) -> Error {
        Error::BadParams(format!("{self}: {reason}"))
    }

    /// Constructs the graph, checking parameter constraints.
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path(n) => {
                if n < 1 {
                    return Err(self.bad("needs at least 1 vertex"));
                }
                let mut b = Builder::new(1);
                if n > 1 {
                    let end = n - 1;
                    b.n = 1;
                    let mut prev = 0;
                    for _ in 1..n {
                        let w = b.fresh();
                        b.edges.push((prev, w));
                        prev = w;
                    }
                    debug_assert_eq!(prev, end);
                }
                b.finish()
            }
            FamilySpec::Cycle(n) => {
                if n < 3 {
                    return Err(self.bad("needs at least 3 vertices"));
                }
                let mut b = Builder::new(1);
                b.path_between(0, 0, n);
                b.finish()
            }
            FamilySpec::Star(n) => {
                if n < 2 {
                    return Err(self.bad("needs at least 2 vertices"));
                }
                let mut b = Builder::new(1);
                b.pendants(0, n - 1);
                b.finish()
            }
            FamilySpec::DoubleStar(a, c) => {
                if a < 1 || c < 1 {
                    return Err(self.bad("both sides need at least 1 vertex"));
                }
                let mut b = Builder::new(2);
                b.edges.push((0, 1));
                b.pendants(0, a - 1);
                b.pendants(1, c - 1);
                b.finish()
            }
            FamilySpec::Theta(l1, l2, l3) => {
                let ls = [l1, l2, l3];
                if ls.contains(&0) {
                    return Err(self.bad("path lengths must be positive"));
                }
                if ls.iter().filter(|&&l| l == 1).count() > 1 {
                    return Err(self.bad("at most one path may have length 1"));
                }
                let mut b = Builder::new(2);
                for l in ls {
                    b.path_between(0, 1, l);
                }
                b.finish()
            }
            FamilySpec::Infty(l1, l2, l3) => {
                if l1 < 3 || l2 < 3 || l3 < 1 {
                    return Err(self.bad("needs cycle lengths >= 3 and path length >= 1"));
                }
                let mut b = Builder::new(2);
                b.path_between(0, 0, l1);
                b.path_between(1, 1, l2);
                b.path_between(0, 1, l3);
                b.finish()
            }
            FamilySpec::InftyStar(l1, l2) => {
                if l1 < 3 || l2 < 3 {
                    return Err(self.bad("needs cycle lengths >= 3"));
                }
                let mut b = Builder::new(1);
                b.path_between(0, 0, l1);
                b.path_between(0, 0, l2);
                b.finish()
            }
            FamilySpec::C3Pendants(s, t, r) => {
                let mut b = Builder::new(3);
                b.edges.extend([(0, 1), (1, 2), (0, 2)]);
                b.pendants(0, s);
                b.pendants(1, t);
                b.pendants(2, r);
                b.finish()
            }
            FamilySpec::C4Pendants(s, t, r, q) => {
                let mut b = Builder::new(4);
                b.edges.extend([(0, 1), (1, 2), (2, 3), (0, 3)]);
                for (v, k) in [s, t, r, q].into_iter().enumerate() {
                    b.pendants(v, k);
                }
                b.finish()
            }
            FamilySpec::Theta122Pendants(p, q) => {
                let mut b = Builder::new(2);
                b.path_between(0, 1, 1);
                b.path_between(0, 1, 2);
                b.path_between(0, 1, 2);
                b.pendants(0, p);
                b.pendants(1, q);
                b.finish()
            }
            FamilySpec::SnPlusE(n) => {
                if n < 3 {
                    return Err(self.bad("needs at least 3 vertices"));
                }
                let mut b = Builder::new(1);
                b.pendants(0, n - 1);
                b.edges.push((1, 2));
                b.finish()
            }
            FamilySpec::C3DotP3 => {
                let mut b = Builder::new(3);
                b.edges.extend([(0, 1), (1, 2), (0, 2)]);
                let w = b.fresh();
                let x = b.fresh();
                b.edges.extend([(0, w), (w, x)]);
                b.finish()
            }
            FamilySpec::K5MinusP4 => {
                let removed = [(1, 2), (2, 3), (3, 4)];
                let edges = (0..5)
                    .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
                    .filter(|e| !removed.contains(e));
                Graph::new(5, edges)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::DoubleStar(a, b) => write!(f, "double-star:{a},{b}"),
            FamilySpec::Theta(a, b, c) => write!(f, "theta:{a},{b},{c}"),
            FamilySpec::Infty(a, b, c) => write!(f, "infty:{a},{b},{c}"),
            FamilySpec::InftyStar(a, b) => write!(f, "infty-star:{a},{b}"),
            FamilySpec::C3Pendants(s, t, r) => write!(f, "c3:{s},{t},{r}"),
            FamilySpec::C4Pendants(s, t, r, q) => write!(f, "c4:{s},{t},{r},{q}"),
            FamilySpec::Theta122Pendants(a, b) => write!(f, "theta122:{a},{b}"),
            FamilySpec::SnPlusE(n) => write!(f, "sn+e:{n}"),
            FamilySpec::C3DotP3 => f.write_str("c3-dot-p3"),
            FamilySpec::K5MinusP4 => f.write_str("k5-minus-p4"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: String| Error::BadFamilySpec {
            spec: s.to_string(),
            reason,
        };
        let (kind, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse()
                        .map_err(|_| bad(format!("`{a}` is not a nonnegative integer")))
                })
                .collect::<Result<_>>()?
        };
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(bad(format!(
                    "`{kind}` takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let spec = match kind {
            "path" => want(1).map(|_| FamilySpec::Path(nums[0])),
            "cycle" => want(1).map(|_| FamilySpec::Cycle(nums[0])),
            "star" => want(1).map(|_| FamilySpec::Star(nums[0])),
            "double-star" | "ds" => want(2).map(|_| FamilySpec::DoubleStar(nums[0], nums[1])),
            "theta" => want(3).map(|_| FamilySpec::Theta(nums[0], nums[1], nums[2])),
            "infty" => want(3).map(|_| FamilySpec::Infty(nums[0], nums[1], nums[2])),
            "infty-star" => want(2).map(|_| FamilySpec::InftyStar(nums[0], nums[1])),
            "c3" => want(3).map(|_| FamilySpec::C3Pendants(nums[0], nums[1], nums[2])),
            "c4" => want(4).map(|_| FamilySpec::C4Pendants(nums[0], nums[1], nums[2], nums[3])),
            "theta122" => want(2).map(|_| FamilySpec::Theta122Pendants(nums[0], nums[1])),
            "sn+e" | "sn-plus-e" => want(1).map(|_| FamilySpec::SnPlusE(nums[0])),
            "c3-dot-p3" => want(0).map(|_| FamilySpec::C3DotP3),
            "k5-minus-p4" => want(0).map(|_| FamilySpec::K5MinusP4),
            _ => Err(bad(format!("unknown family `{kind}`"))),
        }?;
        // surface parameter errors at parse time
        spec.build().map_err(|e| bad(e.to_string()))?;
        Ok(spec)
    }
}

/// The six graphs that never occur as induced subgraphs of a graph maximizing
/// `rho_f` for `f` increasing and convex in `x`.
pub fn forbidden_fixtures() -> Vec<(FamilySpec, Graph)> {
    [
        FamilySpec::Path(5),
        FamilySpec::Cycle(5),
        FamilySpec::C3DotP3,
        FamilySpec::InftyStar(3, 3),
        FamilySpec::Theta(1, 2, 3),
        FamilySpec::K5MinusP4,
    ]
    .into_iter()
    .map(|s| {
        let g = s.build().expect("fixture parameters are valid");
        (s, g)
    })
    .collect()
}

fn sorted_desc<const N: usize>(mut xs: [usize; N]) -> [usize; N] {
    xs.sort_unstable_by(|a, b| b.cmp(a));
    xs
}

/// Recognizes a connected graph as a member of a named family, with parameters normalized
/// (Θ and ∞ lengths ascending, pendant counts descending, 4-cycle counts as the largest
/// rotation or reflection). Returns `None` otherwise.
pub fn identify(g: &Graph) -> Option<FamilySpec> {
    let n = g.order();
    let c = g.cyclomatic_number().ok()?;
    let deg = g.degrees();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    match c {
        0 => {
            if max_deg <= 2 {
                return Some(FamilySpec::Path(n));
            }
            if max_deg == n - 1 {
                return Some(FamilySpec::Star(n));
            }
            let centers: Vec<usize> = (0..n).filter(|&v| deg[v] >= 2).collect();
            if let [a, b] = centers[..] {
                if g.has_edge(a, b) {
                    let [x, y] = sorted_desc([deg[a], deg[b]]);
                    return Some(FamilySpec::DoubleStar(x, y));
                }
            }
            None
        }
        1 => {
            if max_deg == 2 {
                return Some(FamilySpec::Cycle(n));
            }
            let base = g.base_vertices().ok()?;
            let pendant_only = (0..n).all(|v| base.contains(&v) || deg[v] == 1);
            if base.len() == 3 && pendant_only {
                let [s, t, r] = sorted_desc([deg[base[0]] - 2, deg[base[1]] - 2, deg[base[2]] - 2]);
                return Some(FamilySpec::C3Pendants(s, t, r));
            }
            if base.len() == 4 && pendant_only {
                // walk the 4-cycle and take the largest rotation or reflection of the counts
                let a = base[0];
                let nb: Vec<usize> = g
                    .neighbors(a)
                    .iter()
                    .copied()
                    .filter(|v| base.contains(v))
                    .collect();
                let opposite = *base.iter().find(|&&v| v != a && !nb.contains(&v))?;
                let order = [a, nb[0], opposite, nb[1]];
                let counts = order.map(|v| deg[v] - 2);
                let best = (0..4)
                    .flat_map(|r| {
                        let rot = [
                            counts[r],
                            counts[(r + 1) % 4],
                            counts[(r + 2) % 4],
                            counts[(r + 3) % 4],
                        ];
                        [rot, [rot[0], rot[3], rot[2], rot[1]]]
                    })
                    .max()?;
                return Some(FamilySpec::C4Pendants(best[0], best[1], best[2], best[3]));
            }
            None
        }
        2 => {
            let base = g.base_vertices().ok()?;
            if base.len() == n {
                return identify_pendant_free_bicyclic(g);
            }
            let pendant_only = (0..n).all(|v| base.contains(&v) || deg[v] == 1);
            let core = g.base_graph().ok()?;
            if pendant_only
                && identify_pendant_free_bicyclic(&core) == Some(FamilySpec::Theta(1, 2, 2))
            {
                let hubs: Vec<usize> = (0..core.order()).filter(|&v| core.degree(v) == 3).collect();
                let extra: Vec<usize> = base
                    .iter()
                    .map(|&v| deg[v])
                    .zip(core.degrees())
                    .map(|(a, b)| a - b)
                    .collect();
                let on_hubs: usize = hubs.iter().map(|&h| extra[h]).sum();
                if on_hubs == n - 4 {
                    let [p, q] = sorted_desc([extra[hubs[0]], extra[hubs[1]]]);
                    return Some(FamilySpec::Theta122Pendants(p, q));
                }
            }
            None
        }
        _ => None,
    }
}

fn identify_pendant_free_bicyclic(g: &Graph) -> Option<FamilySpec> {
    let paths = g.internal_paths();
    let closed: Vec<usize> = paths.iter().filter(|p| p.closed).map(|p| p.len()).collect();
    let open: Vec<usize> = paths
        .iter()
        .filter(|p| !p.closed)
        .map(|p| p.len())
        .collect();
    match (closed.len(), open.len()) {
        (0, 3) => {
            let mut ls = [open[0], open[1], open[2]];
            ls.sort_unstable();
            Some(FamilySpec::Theta(ls[0], ls[1], ls[2]))
        }
        (2, 1) => Some(FamilySpec::Infty(
            closed[0].min(closed[1]),
            closed[0].max(closed[1]),
            open[0],
        )),
        (2, 0) => Some(FamilySpec::InftyStar(
            closed[0].min(closed[1]),
            closed[0].max(closed[1]),
        )),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn theta_222() {
        let g = FamilySpec::Theta(2, 2, 2).build().unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        assert_eq!(sorted_degrees(&g), vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn infty_star_33() {
        let g = FamilySpec::InftyStar(3, 3).build().unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        assert_eq!(sorted_degrees(&g), vec![2, 2, 2, 2, 4]);
    }

    #[test]
    fn infty_332() {
        let g = FamilySpec::Infty(3, 3, 2).build().unwrap();
        assert_eq!((g.order(), g.size()), (7, 8));
        let hubs: Vec<usize> = (0..7).filter(|&v| g.degree(v) == 3).collect();
        assert_eq!(hubs, vec![0, 1]);
        assert!(!g.has_edge(0, 1));
        assert!(g.neighbors(0).iter().any(|w| g.has_edge(*w, 1)));
    }

    #[test]
    fn fixtures() {
        let fx = forbidden_fixtures();
        assert_eq!(fx.len(), 6);
        let c3p3 = &fx[2].1;
        assert_eq!((c3p3.order(), c3p3.size()), (5, 5));
        assert_eq!(sorted_degrees(c3p3), vec![1, 2, 2, 2, 3]);
        let t123 = &fx[4].1;
        assert_eq!((t123.order(), t123.size()), (5, 6));
        let k5 = &fx[5].1;
        assert_eq!(k5.size(), 7);
        // the missing edges form a path on four vertices
        let missing: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
            .filter(|&(u, v)| !k5.has_edge(u, v))
            .collect();
        let complement = Graph::new(5, missing).unwrap();
        assert_eq!(sorted_degrees(&complement), vec![0, 1, 1, 2, 2]);
    }

    #[test]
    fn parameter_constraints() {
        assert!(FamilySpec::Theta(1, 1, 3).build().is_err());
        assert!(FamilySpec::Theta(0, 2, 3).build().is_err());
        assert!(FamilySpec::Theta(1, 2, 2).build().is_ok());
        assert!(FamilySpec::Infty(2, 3, 1).build().is_err());
        assert!(FamilySpec::InftyStar(3, 2).build().is_err());
        assert!(FamilySpec::Cycle(2).build().is_err());
        assert!(FamilySpec::DoubleStar(0, 2).build().is_err());
    }

    #[test]
    fn spec_strings() {
        for s in [
            "path:9",
            "cycle:8",
            "star:5",
            "double-star:4,4",
            "theta:2,2,2",
            "infty:3,3,2",
            "infty-star:3,3",
            "c3:2,1,0",
            "c4:1,1,0,0",
            "theta122:3,2",
            "sn+e:6",
            "c3-dot-p3",
            "k5-minus-p4",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("theta:1,1,2".parse::<FamilySpec>().is_err());
        assert!("theta:2,2".parse::<FamilySpec>().is_err());
        assert!("hexagon:6".parse::<FamilySpec>().is_err());
        assert!("cycle:x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn small_cases() {
        assert_eq!(FamilySpec::Path(1).build().unwrap().order(), 1);
        assert_eq!(FamilySpec::DoubleStar(4, 4).build().unwrap().order(), 8);
        let sne = FamilySpec::SnPlusE(5).build().unwrap();
        assert!(sne
            .is_isomorphic(&FamilySpec::C3Pendants(2, 0, 0).build().unwrap())
            .unwrap());
    }

    #[test]
    fn identify_round_trips() {
        for spec in [
            FamilySpec::Path(6),
            FamilySpec::Cycle(7),
            FamilySpec::Star(6),
            FamilySpec::DoubleStar(4, 3),
            FamilySpec::Theta(1, 2, 4),
            FamilySpec::Theta(3, 3, 3),
            FamilySpec::Infty(3, 4, 1),
            FamilySpec::Infty(3, 3, 3),
            FamilySpec::InftyStar(3, 5),
            FamilySpec::C3Pendants(2, 1, 0),
            FamilySpec::Theta122Pendants(3, 2),
        ] {
            let g = spec.build().unwrap();
            assert_eq!(identify(&g), Some(spec), "{spec}");
        }
        assert_eq!(
            identify(&FamilySpec::C4Pendants(0, 1, 0, 2).build().unwrap()),
            Some(FamilySpec::C4Pendants(2, 0, 1, 0))
        );
        assert_eq!(
            identify(&FamilySpec::C4Pendants(0, 1, 3, 0).build().unwrap()),
            Some(FamilySpec::C4Pendants(3, 1, 0, 0))
        );
        // a pendant path of length 2 is outside every family
        assert_eq!(identify(&FamilySpec::C3DotP3.build().unwrap()), None);
    }

    #[test]
    fn triangle_with_pendants_has_triangle_base() {
        for (s, t, r) in [(1, 0, 0), (2, 1, 0), (3, 3, 3)] {
            let g = FamilySpec::C3Pendants(s, t, r).build().unwrap();
            assert_eq!(g.order(), 3 + s + t + r);
            assert!(g
                .base_graph()
                .unwrap()
                .is_isomorphic(&FamilySpec::Cycle(3).build().unwrap())
                .unwrap());
        }
    }

    proptest! {
        #[test]
        fn bicyclic_orders_and_sizes(a in 1usize..8, b in 1usize..8, c in 1usize..8) {
            if let Ok(g) = FamilySpec::Theta(a, b, c).build() {
                prop_assert_eq!((g.order(), g.size()), (a + b + c - 1, a + b + c));
                prop_assert_eq!(g.cyclomatic_number().unwrap(), 2);
            }
            if let Ok(g) = FamilySpec::Infty(a + 2, b + 2, c).build() {
                prop_assert_eq!((g.order(), g.size()), (a + b + c + 3, a + b + c + 4));
                prop_assert_eq!(g.cyclomatic_number().unwrap(), 2);
            }
            let g = FamilySpec::InftyStar(a + 2, b + 2).build().unwrap();
            prop_assert_eq!((g.order(), g.size()), (a + b + 3, a + b + 4));
            prop_assert_eq!(g.cyclomatic_number().unwrap(), 2);
        }

        #[test]
        fn main_parameterization(s in 2usize..8, t in 1usize..8) {
            let n = 2 * s + t - 1;
            let theta = FamilySpec::Theta(s, s, t).build().unwrap();
            prop_assert_eq!((theta.order(), theta.size()), (n, n + 1));
            if s >= 3 {
                let infty = FamilySpec::Infty(s, s, t).build().unwrap();
                prop_assert_eq!((infty.order(), infty.size()), (n, n + 1));
            }
        }

        #[test]
        fn unicyclic_families(s in 0usize..5, t in 0usize..5, r in 0usize..5) {
            let g = FamilySpec::C3Pendants(s, t, r).build().unwrap();
            prop_assert_eq!(g.order(), 3 + s + t + r);
            prop_assert_eq!(g.cyclomatic_number().unwrap(), 1);
            let c4 = FamilySpec::C4Pendants(s, t, 0, 0).build().unwrap();
            prop_assert_eq!(c4.cyclomatic_number().unwrap(), 1);
        }
    }
}
