//! f-adjacency matrices and their spectra.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::transforms;
use crate::weights::WeightSpec;

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    /// Builds from rows, rejecting non-square or asymmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = SymMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadParams("matrix is not square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != rows[j][i] {
                    return Err(Error::BadParams(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
                m.data[i * n + j] = v;
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn max_row_sum(&self) -> f64 {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// The matrix with entry `f(d_i, d_j)` on every edge `ij` and zero elsewhere.
pub fn f_adjacency(g: &Graph, f: &WeightSpec) -> Result<SymMatrix> {
    let mut m = SymMatrix::zeros(g.order());
    for &(u, v) in g.edges() {
        m.set(u, v, f.eval(g.degree(u), g.degree(v))?);
    }
    Ok(m)
}

/// Perron root and vector of a symmetric nonnegative matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub rho: f64,
    /// Principal eigenvector scaled to unit maximum entry.
    pub vector: Vec<f64>,
    /// `max_i |(A x)_i - rho x_i|` for the returned pair.
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerronOptions {
    /// Stop once the residual is at most `tol * max(1, rho)`.
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for PerronOptions {
    fn default() -> Self {
        PerronOptions {
            tol: 1e-12,
            max_iterations: 1_000_000,
        }
    }
}

/// Largest eigenvalue of `m` by power iteration on `m + cI`, `c` the largest row sum.
///
/// The shift makes every eigenvalue of the iteration matrix nonnegative, so the
/// `-rho` eigenvalue of bipartite graphs cannot stall convergence.
pub fn spectral_radius(m: &SymMatrix, tol: f64) -> Result<SpectralResult> {
    perron(
        m,
        PerronOptions {
            tol,
            ..PerronOptions::default()
        },
    )
}

pub fn perron(m: &SymMatrix, opts: PerronOptions) -> Result<SpectralResult> {
    let n = m.order();
    let shift = m.max_row_sum();
    let mut x = vec![1.0; n];
    if n == 0 || shift == 0.0 {
        return Ok(SpectralResult {
            rho: 0.0,
            vector: x,
            residual: 0.0,
            iterations: 0,
        });
    }
    let mut residual = f64::INFINITY;
    for it in 1..=opts.max_iterations {
        let y = m.mul_vec(&x);
        let num: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        let rho = num / den;
        residual = y
            .iter()
            .zip(&x)
            .map(|(yi, xi)| (yi - rho * xi).abs())
            .fold(0.0, f64::max);
        if residual <= opts.tol * rho.max(1.0) {
            return Ok(SpectralResult {
                rho,
                vector: x,
                residual,
                iterations: it,
            });
        }
        let mut z: Vec<f64> = y.iter().zip(&x).map(|(yi, xi)| yi + shift * xi).collect();
        let top = z.iter().cloned().fold(0.0, f64::max);
        z.iter_mut().for_each(|v| *v /= top);
        x = z;
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iterations,
        residual,
    })
}

/// Perron data of the f-adjacency matrix of `g` with default options.
pub fn perron_of(g: &Graph, f: &WeightSpec) -> Result<SpectralResult> {
    perron(&f_adjacency(g, f)?, PerronOptions::default())
}

/// `rho_f(g)` with default options.
pub fn rho_f(g: &Graph, f: &WeightSpec) -> Result<f64> {
    Ok(perron_of(g, f)?.rho)
}

/// Largest order accepted by [`full_spectrum`].
pub const SPECTRUM_LIMIT: usize = 64;

/// All eigenvalues in descending order, by cyclic Jacobi rotations.
pub fn full_spectrum(m: &SymMatrix) -> Result<Vec<f64>> {
    let n = m.order();
    if n > SPECTRUM_LIMIT {
        return Err(Error::SizeLimit {
            n,
            limit: SPECTRUM_LIMIT,
        });
    }
    let mut a = m.data.clone();
    let frob = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let threshold = 1e-12 * frob.max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let off = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}

/// Spectra before and after subdividing one edge, with the interlacing verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct InterlacingReport {
    pub holds: bool,
    /// Eigenvalues of `A_f(G)`, descending.
    pub lambda: Vec<f64>,
    /// Eigenvalues of `A_f(G_e)`, descending.
    pub theta: Vec<f64>,
    /// Smallest slack over all finite inequalities; negative when violated.
    pub worst_margin: f64,
}

/// Tolerance for the interlacing inequalities.
pub const INTERLACING_TOL: f64 = 1e-8;

/// Checks `lambda_{i-2} >= theta_i >= lambda_{i+1}` for `i = 1..=n+1`, with
/// `lambda_j = +inf` for `j <= 0` and `lambda_j = -inf` for `j > n`.
///
/// The subdivided graph has new degrees, so its weights are recomputed.
pub fn interlacing_check(g: &Graph, e: Edge, f: &WeightSpec) -> Result<InterlacingReport> {
    let h = transforms::subdivide(g, e)?;
    let lambda = full_spectrum(&f_adjacency(g, f)?)?;
    let theta = full_spectrum(&f_adjacency(&h, f)?)?;
    let n = lambda.len() as isize;
    // 1-based lookup with infinite padding
    let lam = |j: isize| -> f64 {
        if j <= 0 {
            f64::INFINITY
        } else if j > n {
            f64::NEG_INFINITY
        } else {
            lambda[(j - 1) as usize]
        }
    };
    let mut worst = f64::INFINITY;
    for (k, &t) in theta.iter().enumerate() {
        let i = k as isize + 1;
        let upper = lam(i - 2);
        let lower = lam(i + 1);
        if upper.is_finite() {
            worst = worst.min(upper - t);
        }
        if lower.is_finite() {
            worst = worst.min(t - lower);
        }
    }
    Ok(InterlacingReport {
        holds: worst >= -INTERLACING_TOL,
        lambda,
        theta,
        worst_margin: worst,
    })
}
