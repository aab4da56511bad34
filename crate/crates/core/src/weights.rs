//! Degree-based symmetric edge weights `f(x, y)`.
//!
//! A [`WeightSpec`] is parsed from the compact grammar
//!
//! ```text
//! abc | randic | sombor | zagreb1 | zagreb2 | recip-randic
//!     | const:<float>
//!     | table:<x>,<y>=<v>(;<x>,<y>=<v>)*
//! ```
//!
//! Table pairs are unordered, so `3,2=2` also answers `f(2, 3)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Closed-form weight functions from chemical graph theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedWeight {
    /// Atom-bond connectivity, `sqrt((x + y - 2) / (x y))`.
    Abc,
    /// Randić, `1 / sqrt(x y)`.
    Randic,
    /// Sombor, `sqrt(x^2 + y^2)`.
    Sombor,
    /// First Zagreb, `x + y`.
    Zagreb1,
    /// Second Zagreb, `x y`.
    Zagreb2,
    /// Reciprocal Randić, `sqrt(x y)`.
    RecipRandic,
}

impl NamedWeight {
    pub const ALL: [NamedWeight; 6] = [
        NamedWeight::Abc,
        NamedWeight::Randic,
        NamedWeight::Sombor,
        NamedWeight::Zagreb1,
        NamedWeight::Zagreb2,
        NamedWeight::RecipRandic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedWeight::Abc => "abc",
            NamedWeight::Randic => "randic",
            NamedWeight::Sombor => "sombor",
            NamedWeight::Zagreb1 => "zagreb1",
            NamedWeight::Zagreb2 => "zagreb2",
            NamedWeight::RecipRandic => "recip-randic",
        }
    }

    fn apply(self, x: f64, y: f64) -> f64 {
        match self {
            NamedWeight::Abc => ((x + y - 2.0) / (x * y)).sqrt(),
            NamedWeight::Randic => 1.0 / (x * y).sqrt(),
            NamedWeight::Sombor => (x * x + y * y).sqrt(),
            NamedWeight::Zagreb1 => x + y,
            NamedWeight::Zagreb2 => x * y,
            NamedWeight::RecipRandic => (x * y).sqrt(),
        }
    }
}

/// A symmetric positive function of two vertex degrees.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightSpec {
    Named(NamedWeight),
    Constant(f64),
    /// Values keyed by `(min, max)` degree pair.
    Table(BTreeMap<(usize, usize), f64>),
}

fn key(x: usize, y: usize) -> (usize, usize) {
    (x.min(y), x.max(y))
}

impl WeightSpec {
    pub fn constant(c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::BadWeightSpec {
                spec: format!("const:{c}"),
                reason: "constant must be positive and finite".into(),
            });
        }
        Ok(WeightSpec::Constant(c))
    }

    /// Builds a table weight, rejecting non-positive values and conflicting duplicates.
    pub fn table<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), f64)>,
    {
        let mut map = BTreeMap::new();
        for ((x, y), v) in entries {
            if x == 0 || y == 0 {
                return Err(Error::InvalidDegree(x, y));
            }
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::NonPositiveValue { x, y, value: v });
            }
            if let Some(old) = map.insert(key(x, y), v) {
                if old != v {
                    return Err(Error::BadWeightSpec {
                        spec: format!("table entry {x},{y}"),
                        reason: format!("conflicting values {old} and {v}"),
                    });
                }
            }
        }
        if map.is_empty() {
            return Err(Error::BadWeightSpec {
                spec: "table:".into(),
                reason: "table has no entries".into(),
            });
        }
        Ok(WeightSpec::Table(map))
    }

    /// Evaluates `f(x, y)`.
    pub fn eval(&self, x: usize, y: usize) -> Result<f64> {
        if x == 0 || y == 0 {
            return Err(Error::InvalidDegree(x, y));
        }
        let value = match self {
            WeightSpec::Named(w) => {
                let (a, b) = key(x, y);
                w.apply(a as f64, b as f64)
            }
            WeightSpec::Constant(c) => *c,
            WeightSpec::Table(map) => *map.get(&key(x, y)).ok_or(Error::MissingTableEntry(x, y))?,
        };
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::NonPositiveValue { x, y, value });
        }
        Ok(value)
    }

    /// All named weights, in declaration order.
    pub fn all_named() -> Vec<WeightSpec> {
        NamedWeight::ALL
            .iter()
            .map(|&w| WeightSpec::Named(w))
            .collect()
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSpec::Named(w) => f.write_str(w.name()),
            WeightSpec::Constant(c) => write!(f, "const:{c}"),
            WeightSpec::Table(map) => {
                f.write_str("table:")?;
                for (i, ((x, y), v)) in map.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{x},{y}={v}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for WeightSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::BadWeightSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let named = match s {
            "abc" => Some(NamedWeight::Abc),
            "randic" => Some(NamedWeight::Randic),
            "sombor" => Some(NamedWeight::Sombor),
            "zagreb1" => Some(NamedWeight::Zagreb1),
            "zagreb2" => Some(NamedWeight::Zagreb2),
            "recip-randic" | "recip_randic" => Some(NamedWeight::RecipRandic),
            _ => None,
        };
        if let Some(w) = named {
            return Ok(WeightSpec::Named(w));
        }
        if let Some(rest) = s.strip_prefix("const:") {
            let c: f64 = rest
                .trim()
                .parse()
                .map_err(|_| bad("constant is not a number"))?;
            return WeightSpec::constant(c)
                .map_err(|_| bad("constant must be positive and finite"));
        }
        if let Some(rest) = s.strip_prefix("table:") {
            let mut entries = Vec::new();
            for item in rest.split(';') {
                let (pair, value) = item
                    .split_once('=')
                    .ok_or_else(|| bad("table entry must look like x,y=v"))?;
                let (x, y) = pair
                    .split_once(',')
                    .ok_or_else(|| bad("table entry must look like x,y=v"))?;
                let x: usize = x
                    .trim()
                    .parse()
                    .map_err(|_| bad("degree is not an integer"))?;
                let y: usize = y
                    .trim()
                    .parse()
                    .map_err(|_| bad("degree is not an integer"))?;
                let v: f64 = value
                    .trim()
                    .parse()
                    .map_err(|_| bad("value is not a number"))?;
                entries.push(((x, y), v));
            }
            return WeightSpec::table(entries).map_err(|e| match e {
                Error::BadWeightSpec { reason, .. } => bad(&reason),
                other => bad(&other.to_string()),
            });
        }
        Err(bad("unknown weight name"))
    }
}

/// Splits a comma-separated list of weight specs.
///
/// Table specs contain commas themselves, so a fragment starting with a digit is
/// glued back onto the preceding table spec.
pub fn parse_weight_list(s: &str) -> Result<Vec<WeightSpec>> {
    let mut parts: Vec<String> = Vec::new();
    for frag in s.split(',') {
        let starts_numeric = frag.trim_start().starts_with(|c: char| c.is_ascii_digit());
        match parts.last_mut() {
            Some(last) if starts_numeric && last.starts_with("table:") => {
                last.push(',');
                last.push_str(frag);
            }
            _ => parts.push(frag.trim().to_string()),
        }
    }
    parts
        .iter()
        .filter(|p| !p.is_empty())
        .map(|p| p.parse())
        .collect()
}

/// Grid-checkable properties of a weight function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Symmetric,
    IncreasingInX {
        strict: bool,
    },
    ConvexInX,
    /// Increasing and convex in `x`, and same-sum pairs favour imbalance (`>=`).
    PStar,
    /// Increasing and convex in `x`, and same-sum pairs favour balance (strict `<`).
    PStarStar,
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "symmetric" => Property::Symmetric,
            "increasing" => Property::IncreasingInX { strict: false },
            "strictly-increasing" => Property::IncreasingInX { strict: true },
            "convex" => Property::ConvexInX,
            "pstar" => Property::PStar,
            "pstarstar" => Property::PStarStar,
            _ => {
                return Err(Error::BadParams(format!(
                    "unknown property `{s}` (expected symmetric, increasing, strictly-increasing, convex, pstar or pstarstar)"
                )))
            }
        })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Symmetric => "symmetric",
            Property::IncreasingInX { strict: false } => "increasing",
            Property::IncreasingInX { strict: true } => "strictly-increasing",
            Property::ConvexInX => "convex",
            Property::PStar => "pstar",
            Property::PStarStar => "pstarstar",
        })
    }
}

/// A concrete grid point where a property fails.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Asymmetric {
        x: usize,
        y: usize,
    },
    /// `f(x + 1, y)` is below (or, for the strict check, not above) `f(x, y)`.
    NotIncreasing {
        x: usize,
        y: usize,
        strict: bool,
    },
    /// `f(x + 2, y) - 2 f(x + 1, y) + f(x, y) < 0`.
    NotConvex {
        x: usize,
        y: usize,
    },
    /// Same degree sum, `imbalanced` has the larger `|x - y|`.
    SameSum {
        imbalanced: (usize, usize),
        balanced: (usize, usize),
        want_balanced_larger: bool,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::Asymmetric { x, y } => write!(f, "f({x},{y}) != f({y},{x})"),
            Witness::NotIncreasing { x, y, strict } => {
                let op = if strict { "<=" } else { "<" };
                write!(f, "f({},{y}) {op} f({x},{y})", x + 1)
            }
            Witness::NotConvex { x, y } => {
                write!(f, "f({},{y}) - 2f({},{y}) + f({x},{y}) < 0", x + 2, x + 1)
            }
            Witness::SameSum {
                imbalanced: (a, b),
                balanced: (c, d),
                want_balanced_larger,
            } => {
                let op = if want_balanced_larger { ">=" } else { "<" };
                write!(f, "f({a},{b}) {op} f({c},{d})")
            }
        }
    }
}

// Comparisons on the grid are made with a small relative slack so that exact
// ties (zagreb1 on same-sum pairs, linear second differences) are not flagged.
const GRID_EPS: f64 = 1e-12;

fn slack(a: f64, b: f64) -> f64 {
    GRID_EPS * a.abs().max(b.abs()).max(1.0)
}

fn ge(a: f64, b: f64) -> bool {
    a - b >= -slack(a, b)
}

fn gt(a: f64, b: f64) -> bool {
    a - b > slack(a, b)
}

impl Witness {
    /// Re-evaluates `f` at the witness and returns true if the violation is reproduced.
    pub fn reproduces(&self, f: &WeightSpec) -> Result<bool> {
        Ok(match *self {
            Witness::Asymmetric { x, y } => f.eval(x, y)? != f.eval(y, x)?,
            Witness::NotIncreasing { x, y, strict } => {
                let (lo, hi) = (f.eval(x, y)?, f.eval(x + 1, y)?);
                if strict {
                    !gt(hi, lo)
                } else {
                    !ge(hi, lo)
                }
            }
            Witness::NotConvex { x, y } => {
                let d2 = f.eval(x + 2, y)? - 2.0 * f.eval(x + 1, y)? + f.eval(x, y)?;
                !ge(d2, 0.0)
            }
            Witness::SameSum {
                imbalanced,
                balanced,
                want_balanced_larger,
            } => {
                let a = f.eval(imbalanced.0, imbalanced.1)?;
                let b = f.eval(balanced.0, balanced.1)?;
                if want_balanced_larger {
                    !gt(b, a)
                } else {
                    !ge(a, b)
                }
            }
        })
    }
}

/// Outcome of a grid property check over `[1, max_degree]^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub grid: (usize, usize),
    pub witness: Option<Witness>,
    /// For `PStar` / `PStarStar`: whether `f` is also strictly increasing in `x` on the grid.
    pub strictly_increasing: Option<bool>,
}

fn find_asymmetry(f: &WeightSpec, d: usize) -> Result<Option<Witness>> {
    for x in 1..=d {
        for y in (x + 1)..=d {
            if f.eval(x, y)? != f.eval(y, x)? {
                return Ok(Some(Witness::Asymmetric { x, y }));
            }
        }
    }
    Ok(None)
}

fn find_non_increasing(f: &WeightSpec, d: usize, strict: bool) -> Result<Option<Witness>> {
    for y in 1..=d {
        for x in 1..d {
            let (lo, hi) = (f.eval(x, y)?, f.eval(x + 1, y)?);
            let ok = if strict { gt(hi, lo) } else { ge(hi, lo) };
            if !ok {
                return Ok(Some(Witness::NotIncreasing { x, y, strict }));
            }
        }
    }
    Ok(None)
}

fn find_non_convex(f: &WeightSpec, d: usize) -> Result<Option<Witness>> {
    for y in 1..=d {
        for x in 1..=d.saturating_sub(2) {
            let d2 = f.eval(x + 2, y)? - 2.0 * f.eval(x + 1, y)? + f.eval(x, y)?;
            if !ge(d2, 0.0) {
                return Ok(Some(Witness::NotConvex { x, y }));
            }
        }
    }
    Ok(None)
}

fn find_same_sum(f: &WeightSpec, d: usize, want_balanced_larger: bool) -> Result<Option<Witness>> {
    for s in 2..=2 * d {
        // unordered pairs (x, s - x) with x <= s - x, sorted from most to least imbalanced
        let pairs: Vec<(usize, usize)> = (1..=s / 2)
            .filter(|&x| s - x <= d)
            .map(|x| (x, s - x))
            .collect();
        for (i, &imb) in pairs.iter().enumerate() {
            for &bal in &pairs[i + 1..] {
                let a = f.eval(imb.0, imb.1)?;
                let b = f.eval(bal.0, bal.1)?;
                let ok = if want_balanced_larger {
                    gt(b, a)
                } else {
                    ge(a, b)
                };
                if !ok {
                    return Ok(Some(Witness::SameSum {
                        imbalanced: imb,
                        balanced: bal,
                        want_balanced_larger,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Checks `property` of `f` on the integer grid `[1, max_degree]^2`.
pub fn check_property(
    f: &WeightSpec,
    property: Property,
    max_degree: usize,
) -> Result<PropertyReport> {
    if max_degree < 3 {
        return Err(Error::BadParams(format!(
            "property grid needs max degree >= 3, got {max_degree}"
        )));
    }
    let d = max_degree;
    let mut strictly_increasing = None;
    let witness = match property {
        Property::Symmetric => find_asymmetry(f, d)?,
        Property::IncreasingInX { strict } => find_non_increasing(f, d, strict)?,
        Property::ConvexInX => find_non_convex(f, d)?,
        Property::PStar | Property::PStarStar => {
            strictly_increasing = Some(find_non_increasing(f, d, true)?.is_none());
            let want_balanced = property == Property::PStarStar;
            match find_non_increasing(f, d, false)? {
                Some(w) => Some(w),
                None => match find_non_convex(f, d)? {
                    Some(w) => Some(w),
                    None => find_same_sum(f, d, want_balanced)?,
                },
            }
        }
    };
    Ok(PropertyReport {
        property,
        holds: witness.is_none(),
        grid: (1, d),
        witness,
        strictly_increasing,
    })
}
