//! Weighted incidence certificates for `rho_f` (the graph case of the Lu-Man method)
//! and the closed-form solution `F_theta` of the internal-path recurrence.
//!
//! A weighted incidence matrix `B` assigns a value to every pair (vertex, incident edge).
//! `B` is alpha-normal when every vertex sum is 1 and every edge satisfies
//! `B(u,e) B(v,e) / w(e)^2 = alpha`. A consistently alpha-normal `B` certifies
//! `rho_f = alpha^(-1/2)`; subnormal and supernormal versions give one-sided bounds.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, InternalPath};
use crate::spectral;
use crate::weights::WeightSpec;

/// Default absolute tolerance on slacks.
pub const NORMALITY_TOL: f64 = 1e-8;

/// Tolerance of [`check_recurrence`].
pub const RECURRENCE_TOL: f64 = 1e-10;

/// Values of `B` keyed by `(vertex, edge)` with the edge normalized.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct IncidenceWeights {
    values: BTreeMap<(usize, Edge), f64>,
}

impl IncidenceWeights {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: usize, e: Edge, x: f64) {
        self.values.insert((v, edge(e.0, e.1)), x);
    }

    pub fn get(&self, v: usize, e: Edge) -> Option<f64> {
        self.values.get(&(v, edge(e.0, e.1))).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Edge, f64)> + '_ {
        self.values.iter().map(|(&(v, e), &x)| (v, e, x))
    }

    /// `B` with every value equal to `x` on the incidences of `g`.
    pub fn uniform(g: &Graph, x: f64) -> Self {
        let mut b = Self::new();
        for &(u, v) in g.edges() {
            b.set(u, (u, v), x);
            b.set(v, (u, v), x);
        }
        b
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// `alpha(G) = rho_f(G)^(-2)`.
pub fn alpha_of(g: &Graph, f: &WeightSpec) -> Result<f64> {
    require_connected(g)?;
    let rho = spectral::rho_f(g, f)?;
    Ok(rho.powi(-2))
}

/// `B(v, uv) = w(uv) x_u / (rho x_v)` for the Perron vector `x` of `A_f(G)`.
pub fn principal_incidence(g: &Graph, f: &WeightSpec) -> Result<IncidenceWeights> {
    require_connected(g)?;
    let p = spectral::perron_of(g, f)?;
    let x = &p.vector;
    let mut b = IncidenceWeights::new();
    for &(u, v) in g.edges() {
        let w = f.eval(g.degree(u), g.degree(v))?;
        b.set(u, (u, v), w * x[v] / (p.rho * x[u]));
        b.set(v, (u, v), w * x[u] / (p.rho * x[v]));
    }
    Ok(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normality {
    /// Every slack within tolerance of zero.
    Normal,
    /// Vertex sums at most 1, edge ratios at least alpha, and some slack beyond tolerance.
    StrictlySubnormal,
    /// Vertex sums at least 1, edge ratios at most alpha, and some slack beyond tolerance.
    StrictlySupernormal,
    /// Slacks of both signs.
    None,
}

impl Normality {
    pub fn is_subnormal(self) -> bool {
        matches!(self, Normality::Normal | Normality::StrictlySubnormal)
    }

    pub fn is_supernormal(self) -> bool {
        matches!(self, Normality::Normal | Normality::StrictlySupernormal)
    }

    pub fn name(self) -> &'static str {
        match self {
            Normality::Normal => "normal",
            Normality::StrictlySubnormal => "strictly_subnormal",
            Normality::StrictlySupernormal => "strictly_supernormal",
            Normality::None => "none",
        }
    }
}

impl fmt::Display for Normality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalityReport {
    pub alpha: f64,
    pub classification: Normality,
    pub consistent: bool,
    pub tol: f64,
    /// `1 - sum_e B(v, e)` per vertex.
    pub vertex_slack: Vec<f64>,
    /// `B(u,e) B(v,e) / w(e)^2 - alpha` per edge, in edge order.
    pub edge_slack: Vec<f64>,
    /// Largest `|prod - 1|` over the fundamental cycles.
    pub cycle_error: f64,
}

impl NormalityReport {
    /// `rho_f <= alpha^(-1/2)` follows from subnormality alone.
    pub fn upper_bound(&self) -> Option<f64> {
        self.classification
            .is_subnormal()
            .then(|| self.alpha.powf(-0.5))
    }

    /// `rho_f >= alpha^(-1/2)` needs consistency as well.
    pub fn lower_bound(&self) -> Option<f64> {
        (self.consistent && self.classification.is_supernormal()).then(|| self.alpha.powf(-0.5))
    }
}

/// Classifies `B` on `G` with edge weights `w(uv) = f(d_u, d_v)`.
pub fn classify_normality(
    g: &Graph,
    f: &WeightSpec,
    b: &IncidenceWeights,
    alpha: f64,
    tol: f64,
) -> Result<NormalityReport> {
    let weights = g
        .edges()
        .iter()
        .map(|&(u, v)| f.eval(g.degree(u), g.degree(v)))
        .collect::<Result<Vec<f64>>>()?;
    classify_with_edge_weights(g, &weights, b, alpha, tol)
}

/// Same as [`classify_normality`] with explicit edge weights, indexed like `g.edges()`.
pub fn classify_with_edge_weights(
    g: &Graph,
    weights: &[f64],
    b: &IncidenceWeights,
    alpha: f64,
    tol: f64,
) -> Result<NormalityReport> {
    if weights.len() != g.size() {
        return Err(Error::BadParams(format!(
            "{} edge weights given for {} edges",
            weights.len(),
            g.size()
        )));
    }
    let lookup = |v: usize, e: Edge| {
        b.get(v, e)
            .ok_or(Error::IncompleteIncidence { vertex: v, edge: e })
    };
    let mut sums = vec![0.0; g.order()];
    let mut edge_slack = Vec::with_capacity(g.size());
    for (&(u, v), &w) in g.edges().iter().zip(weights) {
        let (bu, bv) = (lookup(u, (u, v))?, lookup(v, (u, v))?);
        sums[u] += bu;
        sums[v] += bv;
        edge_slack.push(bu * bv / (w * w) - alpha);
    }
    let vertex_slack: Vec<f64> = sums.iter().map(|s| 1.0 - s).collect();

    let all = vertex_slack.iter().chain(&edge_slack);
    let sub = all.clone().all(|&s| s >= -tol);
    let sup = all.clone().all(|&s| s <= tol);
    let classification = match (sub, sup) {
        (true, true) => Normality::Normal,
        (true, false) => Normality::StrictlySubnormal,
        (false, true) => Normality::StrictlySupernormal,
        (false, false) => Normality::None,
    };

    let mut cycle_error: f64 = 0.0;
    for cycle in g.fundamental_cycles() {
        let k = cycle.len();
        let mut prod = 1.0;
        for i in 0..k {
            let (prev, cur) = (cycle[i], cycle[(i + 1) % k]);
            prod *= lookup(cur, (prev, cur))? / lookup(prev, (prev, cur))?;
        }
        let err = (prod - 1.0).abs();
        cycle_error = if err.is_nan() {
            f64::INFINITY
        } else {
            cycle_error.max(err)
        };
    }

    Ok(NormalityReport {
        alpha,
        classification,
        consistent: cycle_error <= tol,
        tol,
        vertex_slack,
        edge_slack,
        cycle_error,
    })
}

/// `F_theta(x) = (1 - tanh(theta) tanh(x theta / 2)) / 2`.
pub fn f_theta(x: f64, theta: f64) -> f64 {
    0.5 * (1.0 - theta.tanh() * (x * theta / 2.0).tanh())
}

/// Parameters of the path recurrence `x_n = 1 - alpha' / x_(n-1)` for a weight `f` at `alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct FThetaContext {
    /// `f(2,2)^2 alpha`, in `(0, 1/4]`.
    pub alpha_prime: f64,
    /// `arccosh(alpha'^(-1/2) / 2)`.
    pub theta: f64,
    /// `f(2,2)`.
    pub f22: f64,
    pub weight: WeightSpec,
}

impl FThetaContext {
    /// Relative slack allowed above 1/4 before `alpha'` is rejected; values inside it are clamped.
    pub const QUARTER_SLACK: f64 = 1e-9;

    pub fn new(f: &WeightSpec, alpha: f64) -> Result<Self> {
        let f22 = f.eval(2, 2)?;
        let ap = f22 * f22 * alpha;
        // also rejects NaN
        if ap.is_nan() || ap <= 0.0 || ap > 0.25 * (1.0 + Self::QUARTER_SLACK) {
            return Err(Error::AlphaOutOfRange(ap));
        }
        let alpha_prime = ap.min(0.25);
        Ok(FThetaContext {
            alpha_prime,
            theta: (0.5 / alpha_prime.sqrt()).acosh(),
            f22,
            weight: f.clone(),
        })
    }

    /// Context for `const:1`, where `alpha' = alpha`.
    pub fn from_alpha_prime(alpha_prime: f64) -> Result<Self> {
        Self::new(&WeightSpec::Constant(1.0), alpha_prime)
    }

    /// Context for `const:1` at the given `theta >= 0`.
    pub fn from_theta(theta: f64) -> Result<Self> {
        if !theta.is_finite() || theta < 0.0 {
            return Err(Error::BadParams(format!(
                "theta must be finite and nonnegative, got {theta}"
            )));
        }
        let c = theta.cosh();
        Ok(FThetaContext {
            alpha_prime: 0.25 / (c * c),
            theta,
            f22: 1.0,
            weight: WeightSpec::Constant(1.0),
        })
    }

    /// `alpha = alpha' / f(2,2)^2`.
    pub fn alpha(&self) -> f64 {
        self.alpha_prime / (self.f22 * self.f22)
    }

    /// `(f(d,2) / f(2,2))^2`.
    pub fn beta(&self, d: usize) -> Result<f64> {
        let r = self.weight.eval(d, 2)? / self.f22;
        Ok(r * r)
    }

    pub fn f_theta(&self, x: f64) -> f64 {
        f_theta(x, self.theta)
    }
}

/// Largest deviation of `x_n = F_theta(p + q - 2n)` from `1 - alpha' / x_(n-1)` over `window`.
pub fn recurrence_error(ctx: &FThetaContext, p: i64, q: i64, window: RangeInclusive<i64>) -> f64 {
    let x = |n: i64| ctx.f_theta((p + q - 2 * n) as f64);
    window
        .map(|n| (x(n) - (1.0 - ctx.alpha_prime / x(n - 1))).abs())
        .fold(0.0, f64::max)
}

/// True when the closed form satisfies the recurrence over `window` to [`RECURRENCE_TOL`].
pub fn check_recurrence(ctx: &FThetaContext, p: i64, q: i64, window: RangeInclusive<i64>) -> bool {
    recurrence_error(ctx, p, q, window) <= RECURRENCE_TOL
}

/// `(beta(d0) F(l1), beta(dl) F(l2))`: endpoint values of an alpha-normal assignment on an
/// internal path of length `l` split as `l1 + l2 = 2l`.
pub fn path_endpoint_values(
    l: usize,
    l1: i64,
    l2: i64,
    d0: usize,
    dl: usize,
    ctx: &FThetaContext,
) -> Result<(f64, f64)> {
    if l == 0 || l1 + l2 != 2 * l as i64 {
        return Err(Error::BadSplit { l, l1, l2 });
    }
    Ok((
        ctx.beta(d0)? * ctx.f_theta(l1 as f64),
        ctx.beta(dl)? * ctx.f_theta(l2 as f64),
    ))
}

/// Endpoint value when both ends are similar (`l1 = l2 = l`): `beta(d) F(l)`.
pub fn similar_endpoint_value(l: usize, d: usize, ctx: &FThetaContext) -> Result<f64> {
    Ok(ctx.beta(d)? * ctx.f_theta(l as f64))
}

/// Which bound on the unmodified graph survives a single-edge weight change.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundDirection {
    /// Weight unchanged: both bounds hold.
    Both,
    /// Weight lowered: the modified radius is a lower bound for the original.
    LowerOnly,
    /// Weight raised: the modified radius is an upper bound for the original.
    UpperOnly,
}

/// The weight change needed to certify a path of length 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleEdgeWeight {
    pub edge: Edge,
    pub original: f64,
    /// `f(d0,2) f(dl,2) / f(2,2)`.
    pub modified: f64,
}

impl SingleEdgeWeight {
    pub fn direction(&self) -> BoundDirection {
        let scale = self.original.abs().max(1.0);
        if (self.modified - self.original).abs() <= 1e-12 * scale {
            BoundDirection::Both
        } else if self.modified < self.original {
            BoundDirection::LowerOnly
        } else {
            BoundDirection::UpperOnly
        }
    }
}

/// Values of an alpha-normal assignment along one internal path.
#[derive(Debug, Clone, PartialEq)]
pub struct PathCertificate {
    pub values: Vec<(usize, Edge, f64)>,
    pub endpoints: (f64, f64),
    pub single_edge: Option<SingleEdgeWeight>,
}

/// Fills `B` along `path` with the split `l1 + l2 = 2l`: `B(v_i, e_(i+1)) = F(l1 - 2i)` and
/// `B(v_i, e_i) = 1 - F(l1 - 2i)` inside, with endpoint values from [`path_endpoint_values`].
/// A path of length 1 only admits such values after changing its edge weight, which must be
/// allowed with `modify_single_edge`.
pub fn path_certificate(
    g: &Graph,
    path: &InternalPath,
    l1: i64,
    ctx: &FThetaContext,
    modify_single_edge: bool,
) -> Result<PathCertificate> {
    let l = path.len();
    let l2 = 2 * l as i64 - l1;
    let (d0, dl) = (g.degree(path.start()), g.degree(path.end()));
    let endpoints = path_endpoint_values(l, l1, l2, d0, dl, ctx)?;
    let vs = &path.vertices;
    let mut values = Vec::with_capacity(2 * l);
    values.push((vs[0], edge(vs[0], vs[1]), endpoints.0));
    for i in 1..l {
        let x = ctx.f_theta((l1 - 2 * i as i64) as f64);
        values.push((vs[i], edge(vs[i - 1], vs[i]), 1.0 - x));
        values.push((vs[i], edge(vs[i], vs[i + 1]), x));
    }
    values.push((vs[l], edge(vs[l - 1], vs[l]), endpoints.1));
    let single_edge = if l == 1 {
        if !modify_single_edge {
            return Err(Error::UnmodifiedSingleEdge);
        }
        let f = &ctx.weight;
        Some(SingleEdgeWeight {
            edge: edge(vs[0], vs[1]),
            original: f.eval(d0, dl)?,
            modified: f.eval(d0, 2)? * f.eval(dl, 2)? / ctx.f22,
        })
    } else {
        None
    };
    Ok(PathCertificate {
        values,
        endpoints,
        single_edge,
    })
}

/// A full certificate assembled from internal-path assignments.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub incidence: IncidenceWeights,
    /// Edge weights used for classification, after any single-edge modification.
    pub edge_weights: Vec<f64>,
    pub modified: Vec<SingleEdgeWeight>,
    pub report: NormalityReport,
}

impl Certificate {
    /// Combined direction of all weight modifications, or `None` when they conflict.
    pub fn direction(&self) -> Option<BoundDirection> {
        self.modified
            .iter()
            .map(|m| m.direction())
            .try_fold(BoundDirection::Both, |acc, d| match (acc, d) {
                (BoundDirection::Both, d) | (d, BoundDirection::Both) => Some(d),
                (a, b) if a == b => Some(a),
                _ => None,
            })
    }
}

/// Assembles `B` on a pendant-free graph from one split per internal path, then classifies it
/// at `alpha` (the context's alpha). At a closed path the two endpoint values both count
/// toward the shared vertex.
pub fn assemble_certificate(
    g: &Graph,
    ctx: &FThetaContext,
    splits: &[(InternalPath, i64)],
    modify_single_edges: bool,
    tol: f64,
) -> Result<Certificate> {
    let f = &ctx.weight;
    let mut incidence = IncidenceWeights::new();
    let mut edge_weights = g
        .edges()
        .iter()
        .map(|&(u, v)| f.eval(g.degree(u), g.degree(v)))
        .collect::<Result<Vec<f64>>>()?;
    let mut modified = Vec::new();
    for (path, l1) in splits {
        let pc = path_certificate(g, path, *l1, ctx, modify_single_edges)?;
        for (v, e, x) in pc.values {
            incidence.set(v, e, x);
        }
        if let Some(m) = pc.single_edge {
            let idx = g
                .edge_index(m.edge.0, m.edge.1)
                .ok_or(Error::EdgeNotFound(m.edge.0, m.edge.1))?;
            edge_weights[idx] = m.modified;
            modified.push(m);
        }
    }
    let report = classify_with_edge_weights(g, &edge_weights, &incidence, ctx.alpha(), tol)?;
    Ok(Certificate {
        incidence,
        edge_weights,
        modified,
        report,
    })
}

/// Every internal path of `g` with the symmetric split `l1 = l2 = l`.
pub fn similar_splits(g: &Graph) -> Vec<(InternalPath, i64)> {
    g.internal_paths()
        .into_iter()
        .map(|p| {
            let l = p.len() as i64;
            (p, l)
        })
        .collect()
}

/// Worst margins of the two `F_theta` inequalities on a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    pub theta: f64,
    /// Minimum of `F(a) + F(-b) - F(a-b) - F(0)` over grid pairs `a >= b >= 0`.
    pub convexity_margin: f64,
    pub convexity_cases: usize,
    /// Minimum of `4 F(2x) - 3 F(x)` over grid points `x >= 3`.
    pub doubling_margin: f64,
    pub doubling_cases: usize,
}

impl InequalityReport {
    /// The first inequality is not strict (equality at `a = b = 0`); the second is.
    pub fn holds(&self) -> bool {
        self.convexity_margin >= -1e-12 && self.doubling_margin > 0.0
    }
}

/// Evaluates `F(a) + F(-b) >= F(a-b) + F(0)` for `a >= b >= 0` drawn from `ab_grid`, and
/// `4F(2x) > 3F(x)` for `x >= 3` drawn from `x_grid`. Points outside the hypotheses are skipped.
pub fn inequality_oracles(theta: f64, ab_grid: &[f64], x_grid: &[f64]) -> InequalityReport {
    let f = |x: f64| f_theta(x, theta);
    let mut convexity_margin = f64::INFINITY;
    let mut convexity_cases = 0;
    for &a in ab_grid {
        for &b in ab_grid {
            if a >= b && b >= 0.0 {
                convexity_margin = convexity_margin.min(f(a) + f(-b) - f(a - b) - f(0.0));
                convexity_cases += 1;
            }
        }
    }
    let mut doubling_margin = f64::INFINITY;
    let mut doubling_cases = 0;
    for &x in x_grid.iter().filter(|&&x| x >= 3.0) {
        doubling_margin = doubling_margin.min(4.0 * f(2.0 * x) - 3.0 * f(x));
        doubling_cases += 1;
    }
    InequalityReport {
        theta,
        convexity_margin,
        convexity_cases,
        doubling_margin,
        doubling_cases,
    }
}
