//! The `fspectra` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a computation errors,
//! 2 on malformed input.

use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::luman::{self, NORMALITY_TOL};
use crate::search::{self, GraphClass, Objective, Theorem, TheoremParams};
use crate::spectral::{self, PerronOptions};
use crate::transforms;
use crate::weights::{self, Property, WeightSpec};

/// Environment variable capping the worker threads (0 or unset = all cores).
pub const THREADS_ENV: &str = "FSPECTRA_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "fspectra",
    version,
    about = "Spectral radii of degree-weighted adjacency matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Largest eigenvalue of the f-adjacency matrix.
    Rho {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        weight: WeightSpec,
        /// Relative residual tolerance of the power iteration.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Also print the Perron vector, scaled to maximum entry 1.
        #[arg(long)]
        vector: bool,
    },
    /// All eigenvalues in descending order.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        weight: WeightSpec,
    },
    /// Principal incidence matrix, alpha and its normality report.
    Certify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        weight: WeightSpec,
        #[arg(long, default_value_t = NORMALITY_TOL)]
        tol: f64,
    },
    /// Subdivide one edge, or the best cycle edge with --best.
    Subdivide {
        #[command(flatten)]
        input: GraphInput,
        /// Edge as `u,v`.
        #[arg(long, value_parser = parse_edge, required_unless_present = "best", conflicts_with = "best")]
        edge: Option<(usize, usize)>,
        /// Subdivide at the cycle vertex minimizing f(d,2) x_v.
        #[arg(long, requires = "weight")]
        best: bool,
        #[arg(long)]
        weight: Option<WeightSpec>,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Move every neighbour of u that is not a neighbour of v over to v.
    Kelmans {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// Print rho before and after for this weight.
        #[arg(long)]
        weight: Option<WeightSpec>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List one graph per isomorphism class.
    Enumerate {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        order: usize,
        /// Must agree with the class when given.
        #[arg(long)]
        size: Option<usize>,
        /// Add rho_f for this weight.
        #[arg(long)]
        weight: Option<WeightSpec>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Extremal rho_f over a class.
    Extremal {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        weight: WeightSpec,
        #[arg(long)]
        objective: Objective,
        /// `text` prints the report; `tsv` and `jsonl` list the winners.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a theorem over parameter ranges and print a pass/fail table.
    Verify {
        #[arg(long)]
        theorem: Theorem,
        /// Comma-separated weight specs.
        #[arg(long, value_parser = parse_weights)]
        weights: Weights,
        /// Orders, e.g. `8..10`.
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        #[arg(long, value_parser = parse_range)]
        s: Option<RangeInclusive<usize>>,
        #[arg(long, value_parser = parse_range)]
        t: Option<RangeInclusive<usize>>,
        /// Comma-separated classes for the maximizer statements.
        #[arg(long, value_delimiter = ',')]
        classes: Option<Vec<GraphClass>>,
    },
    /// Check a weight property on a degree grid.
    Property {
        #[arg(long)]
        weight: WeightSpec,
        #[arg(long)]
        property: Property,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph file in the `n m` / `u v` text format; `-` reads standard input.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Named family, e.g. `theta:3,3,2`.
    #[arg(long)]
    family: Option<FamilySpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
    Jsonl,
}

/// Newtype so clap does not treat the list as a repeated argument.
#[derive(Debug, Clone)]
pub struct Weights(pub Vec<WeightSpec>);

fn parse_weights(s: &str) -> Result<Weights> {
    let list = weights::parse_weight_list(s)?;
    if list.is_empty() {
        return Err(Error::BadParams("empty weight list".into()));
    }
    Ok(Weights(list))
}

fn parse_edge(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::BadParams(format!("edge must look like `u,v`, got `{s}`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

/// `a..b` and `a..=b` are both inclusive; a single number is a one-point range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::BadParams(format!("range must look like `a..b` or `a`, got `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let a = num(s)?;
            a..=a
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

/// Six decimals, without a negative sign on zero.
pub fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    if let Some(spec) = input.family {
        return spec.build();
    }
    let path = input.graph.as_ref().expect("clap requires one input");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::BadGraph(format!("cannot read standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| Error::BadGraph(format!("cannot read {}: {e}", path.display())))?
    };
    text.parse()
}

fn emit_graph(g: &Graph, out_path: &Option<PathBuf>, out: &mut dyn Write) -> Result<()> {
    match out_path {
        Some(p) => fs::write(p, g.to_string())
            .map_err(|e| Error::BadParams(format!("cannot write {}: {e}", p.display()))),
        None => {
            write!(out, "{g}").map_err(io_err)?;
            Ok(())
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::BadParams(format!("write failed: {e}"))
}

/// Applies [`THREADS_ENV`] to the global thread pool. Later calls have no effect.
fn configure_threads() {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    if threads > 0 {
        // fails harmlessly if the pool was already built
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    configure_threads();
    match execute(cli.command, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

/// Runs one command; `Ok(false)` means a check failed.
fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(io_err);
    match command {
        Command::Rho {
            input,
            weight,
            tol,
            vector,
        } => {
            if tol.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
                return Err(Error::BadParams(format!(
                    "tolerance must be positive, got {tol}"
                )));
            }
            let g = load_graph(&input)?;
            let m = spectral::f_adjacency(&g, &weight)?;
            let r = spectral::perron(
                &m,
                PerronOptions {
                    tol,
                    ..PerronOptions::default()
                },
            )?;
            w(out, format!("rho\t{}", fmt6(r.rho)))?;
            if vector {
                for (i, x) in r.vector.iter().enumerate() {
                    w(out, format!("x\t{i}\t{}", fmt6(*x)))?;
                }
            }
        }
        Command::Spectrum { input, weight } => {
            let g = load_graph(&input)?;
            for lambda in spectral::full_spectrum(&spectral::f_adjacency(&g, &weight)?)? {
                w(out, fmt6(lambda))?;
            }
        }
        Command::Certify { input, weight, tol } => {
            let g = load_graph(&input)?;
            let alpha = luman::alpha_of(&g, &weight)?;
            let b = luman::principal_incidence(&g, &weight)?;
            let report = luman::classify_normality(&g, &weight, &b, alpha, tol)?;
            w(out, format!("rho\t{}", fmt6(alpha.powf(-0.5))))?;
            w(out, format!("alpha\t{alpha:.9}"))?;
            for (v, (a, c), x) in b.iter() {
                w(out, format!("B\t{v}\t{a}-{c}\t{}", fmt6(x)))?;
            }
            let worst = |xs: &[f64]| xs.iter().map(|x| x.abs()).fold(0.0, f64::max);
            w(out, format!("classification\t{}", report.classification))?;
            w(out, format!("consistent\t{}", report.consistent))?;
            w(out, format!("tol\t{:e}", report.tol))?;
            w(
                out,
                format!("max_vertex_slack\t{:.1e}", worst(&report.vertex_slack)),
            )?;
            w(
                out,
                format!("max_edge_slack\t{:.1e}", worst(&report.edge_slack)),
            )?;
            w(out, format!("cycle_error\t{:.1e}", report.cycle_error))?;
            return Ok(report.classification == luman::Normality::Normal && report.consistent);
        }
        Command::Subdivide {
            input,
            edge,
            best,
            weight,
            out: out_path,
        } => {
            let g = load_graph(&input)?;
            let h = if best {
                let f = weight.expect("clap requires --weight with --best");
                let s = transforms::best_cycle_subdivision(&g, &f)?;
                w(
                    err,
                    format!(
                        "subdivided {}-{} on cycle {:?}: rho {} -> {}",
                        s.vertex,
                        s.neighbor,
                        s.cycle,
                        fmt6(s.rho_before),
                        fmt6(s.rho_after)
                    ),
                )?;
                s.graph
            } else {
                let e = edge.expect("clap requires --edge without --best");
                transforms::subdivide(&g, e)?
            };
            emit_graph(&h, &out_path, out)?;
        }
        Command::Kelmans {
            input,
            u,
            v,
            weight,
            out: out_path,
        } => {
            let g = load_graph(&input)?;
            let k = transforms::kelmans(&g, u, v)?;
            let iso = k
                .isomorphic
                .map_or("unknown".to_string(), |b| b.to_string());
            w(
                err,
                format!(
                    "moved {:?}; adjacent={} connected={} isomorphic={iso}",
                    k.moved, k.adjacent, k.connected
                ),
            )?;
            if let Some(f) = weight {
                let before = spectral::rho_f(&g, &f)?;
                let after = spectral::rho_f(&k.graph, &f)?;
                w(err, format!("rho {} -> {}", fmt6(before), fmt6(after)))?;
            }
            emit_graph(&k.graph, &out_path, out)?;
        }
        Command::Enumerate {
            class,
            order,
            size,
            weight,
            format,
        } => {
            let m = (order + class.cyclomatic_number()).saturating_sub(1);
            if let Some(size) = size {
                if size != m {
                    return Err(Error::BadParams(format!(
                        "class {class} at order {order} has {m} edges, not {size}"
                    )));
                }
            }
            match weight {
                Some(f) => {
                    let entries = search::evaluate_class(class, order, &f)?;
                    write_entries(out, &entries, format)?;
                }
                None => {
                    let members = search::class_members(class, order)?;
                    match format {
                        Format::Jsonl => {
                            for (g, cf, fam) in members {
                                let record = serde_json::json!({
                                    "graph6": cf.map_or_else(|| g.graph6(), |c| c.graph6()),
                                    "family": fam.map(|s| s.to_string()),
                                });
                                w(out, record.to_string())?;
                            }
                        }
                        _ => {
                            w(out, "graph6\tfamily".to_string())?;
                            for (g, cf, fam) in members {
                                let g6 = cf.map_or_else(|| g.graph6(), |c| c.graph6());
                                w(
                                    out,
                                    format!(
                                        "{g6}\t{}",
                                        fam.map_or("-".to_string(), |s| s.to_string())
                                    ),
                                )?;
                            }
                        }
                    }
                }
            }
        }
        Command::Extremal {
            class,
            order,
            weight,
            objective,
            format,
        } => {
            let report = search::extremal(class, order, &weight, objective)?;
            match format {
                Format::Text => write!(out, "{report}").map_err(io_err)?,
                _ => write_entries(out, &report.winners, format)?,
            }
            w(err, format!("elapsed {:.3}s", report.elapsed.as_secs_f64()))?;
        }
        Command::Verify {
            theorem,
            weights,
            n,
            s,
            t,
            classes,
        } => {
            let defaults = theorem.default_params();
            let params = TheoremParams {
                n: n.unwrap_or(defaults.n),
                s: s.unwrap_or(defaults.s),
                t: t.unwrap_or(defaults.t),
                classes: classes.unwrap_or(defaults.classes),
            };
            let report = search::verify_theorem(theorem, &params, &weights.0)?;
            write!(out, "{report}").map_err(io_err)?;
            let ok = report.passed();
            w(
                out,
                format!("verdict\t{}", if ok { "PASS" } else { "FAIL" }),
            )?;
            return Ok(ok);
        }
        Command::Property {
            weight,
            property,
            max_degree,
        } => {
            let r = weights::check_property(&weight, property, max_degree)?;
            w(out, format!("property\t{}", r.property))?;
            w(out, format!("grid\t{}..{}", r.grid.0, r.grid.1))?;
            w(out, format!("holds\t{}", r.holds))?;
            if let Some(strict) = r.strictly_increasing {
                w(out, format!("strictly_increasing\t{strict}"))?;
            }
            if let Some(wit) = &r.witness {
                w(out, format!("witness\t{wit}"))?;
            }
            return Ok(r.holds);
        }
    }
    Ok(true)
}

fn write_entries(out: &mut dyn Write, entries: &[search::Entry], format: Format) -> Result<()> {
    match format {
        Format::Jsonl => search::write_jsonl(out, entries),
        _ => search::write_tsv(out, entries),
    }
    .map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fspectra").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..5").unwrap(), 3..=5);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt6(-1e-17), "0.000000");
        assert_eq!(fmt6(2.0f64.sqrt()), "1.414214");
    }

    #[test]
    fn rho_on_sparse_table() {
        let (code, out, _) = run_str(&[
            "rho",
            "--family",
            "infty-star:3,3",
            "--weight",
            "table:2,2=1;3,2=2;4,2=2",
        ]);
        assert_eq!(code, 0);
        let v: f64 = out.trim().strip_prefix("rho\t").unwrap().parse().unwrap();
        assert!((v - 4.5311).abs() < 5e-4);
    }

    #[test]
    fn rho_on_cycle() {
        let (code, out, _) = run_str(&["rho", "--family", "cycle:12", "--weight", "sombor"]);
        assert_eq!(code, 0);
        assert_eq!(out, "rho\t5.656854\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(
            run_str(&["rho", "--family", "cycle:2", "--weight", "sombor"]).0,
            2
        );
        assert_eq!(
            run_str(&["rho", "--family", "cycle:5", "--weight", "nope"]).0,
            2
        );
        assert_eq!(run_str(&["rho", "--weight", "sombor"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(
            run_str(&[
                "enumerate",
                "--class",
                "bicyclic",
                "--order",
                "6",
                "--size",
                "6"
            ])
            .0,
            2
        );
        assert_eq!(
            run_str(&["enumerate", "--class", "bicyclic", "--order", "11"]).0,
            2
        );
    }

    #[test]
    fn verify_equality_passes() {
        let (code, out, _) = run_str(&[
            "verify",
            "--theorem",
            "theta-infty-equality",
            "--s",
            "3..5",
            "--t",
            "2..4",
            "--weights",
            "sombor,randic",
        ]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().filter(|l| l.contains("\tPASS\t")).count(), 18);
        assert!(out.ends_with("verdict\tPASS\n"));
    }

    #[test]
    fn verify_failure_exits_one() {
        // every graph ties for randic, so the minimizer is not unique
        let (code, out, _) = run_str(&[
            "verify",
            "--theorem",
            "theta-minimal",
            "--n",
            "8",
            "--weights",
            "randic",
        ]);
        assert_eq!(code, 1);
        assert!(out.ends_with("verdict\tFAIL\n"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("extremal"));
    }

    #[test]
    fn property_exit_codes() {
        assert_eq!(
            run_str(&["property", "--weight", "sombor", "--property", "pstar"]).0,
            0
        );
        let (code, out, _) =
            run_str(&["property", "--weight", "randic", "--property", "increasing"]);
        assert_eq!(code, 1);
        assert!(out.contains("witness\t"));
    }
}
