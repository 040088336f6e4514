//! The functionals `M(x, y)` and `N(x, y)`, the contraction residual, and
//! sample-based certification over a domain.
//!
//! For maps `T, S : E → B(E)` and gauges `(f, φ, ψ)` the condition at a pair
//! `(x, y)` is
//!
//! ```text
//! f(δ(Tx, Sy)) ≤ f(M) − φ(f(M)) + ψ(N)
//! M = max{ d(x, y), δ(Tx, x), δ(y, Sy), (D(y, Tx) + D(x, Sy)) / 2 }
//! N = min{ D(y, Tx), D(x, Sy) }
//! ```
//!
//! The residual is `rhs − lhs`, so the condition holds at `(x, y)` iff the
//! residual is nonnegative. Certification evaluates the residual on a finite
//! sample of pairs; it is evidence, not proof.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauge::GaugeTriple;
use crate::metric::{BoundedSet, MetricSpace, Point};

/// Default tolerance below zero before a residual counts as a violation.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Default number of violations kept in a report.
pub const DEFAULT_MAX_VIOLATIONS: usize = 100;

/// A set-valued map `E → B(E)`.
pub trait MultiMap: Send + Sync {
    fn image(&self, x: &Point) -> Result<BoundedSet>;
}

impl<F> MultiMap for F
where
    F: Fn(&Point) -> Result<BoundedSet> + Send + Sync,
{
    fn image(&self, x: &Point) -> Result<BoundedSet> {
        self(x)
    }
}

/// Wraps a real function pair `x ↦ [lo(x), hi(x)]` as a map on the line.
pub fn interval_map<F>(bounds: F) -> impl MultiMap
where
    F: Fn(f64) -> (f64, f64) + Send + Sync,
{
    move |p: &Point| {
        let x = p
            .as_real()
            .ok_or_else(|| Error::invalid(format!("{p} is not a real-line point")))?;
        let (lo, hi) = bounds(x);
        BoundedSet::interval(lo, hi).map_err(|e| Error::MapEval {
            x: p.to_string(),
            message: e.to_string(),
        })
    }
}

/// The pair `(T, S)` together with the space they act on.
#[derive(Clone)]
pub struct MapPair {
    pub space: MetricSpace,
    t: Arc<dyn MultiMap>,
    s: Arc<dyn MultiMap>,
}

impl fmt::Debug for MapPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MapPair")
            .field("space", &self.space)
            .finish_non_exhaustive()
    }
}

impl MapPair {
    pub fn new(space: MetricSpace, t: impl MultiMap + 'static, s: impl MultiMap + 'static) -> Self {
        MapPair {
            space,
            t: Arc::new(t),
            s: Arc::new(s),
        }
    }

    pub fn from_arcs(space: MetricSpace, t: Arc<dyn MultiMap>, s: Arc<dyn MultiMap>) -> Self {
        MapPair { space, t, s }
    }

    /// `T = S`.
    pub fn same(space: MetricSpace, t: impl MultiMap + 'static) -> Self {
        let t: Arc<dyn MultiMap> = Arc::new(t);
        MapPair { space, s: t.clone(), t }
    }

    /// The pair `(S, T)`.
    pub fn swapped(&self) -> Self {
        MapPair {
            space: self.space.clone(),
            t: self.s.clone(),
            s: self.t.clone(),
        }
    }

    fn eval(&self, map: &dyn MultiMap, x: &Point) -> Result<BoundedSet> {
        self.space.check_point(x)?;
        let set = map.image(x).map_err(|e| match e {
            e @ Error::MapEval { .. } => e,
            other => Error::MapEval {
                x: x.to_string(),
                message: other.to_string(),
            },
        })?;
        self.space.check_set(&set).map_err(|e| Error::MapEval {
            x: x.to_string(),
            message: e.to_string(),
        })?;
        Ok(set)
    }

    pub fn image_t(&self, x: &Point) -> Result<BoundedSet> {
        self.eval(self.t.as_ref(), x)
    }

    pub fn image_s(&self, x: &Point) -> Result<BoundedSet> {
        self.eval(self.s.as_ref(), x)
    }

    fn terms(&self, x: &Point, y: &Point) -> Result<Terms> {
        let tx = self.image_t(x)?;
        let sy = self.image_s(y)?;
        let (px, py) = (BoundedSet::singleton(x.clone()), BoundedSet::singleton(y.clone()));
        let sp = &self.space;
        let d_xy = sp.dist_unchecked(x, y);
        let delta_tx_x = sp.sup_dist_unchecked(&tx, &px);
        let delta_y_sy = sp.sup_dist_unchecked(&py, &sy);
        let gap_y_tx = sp.gap_unchecked(&py, &tx);
        let gap_x_sy = sp.gap_unchecked(&px, &sy);
        let m = d_xy.max(delta_tx_x).max(delta_y_sy).max((gap_y_tx + gap_x_sy) / 2.0);
        let n = gap_y_tx.min(gap_x_sy);
        Ok(Terms {
            delta_tx_sy: sp.sup_dist_unchecked(&tx, &sy),
            m,
            n,
        })
    }
}

struct Terms {
    delta_tx_sy: f64,
    m: f64,
    n: f64,
}

/// `M(x, y)`.
pub fn big_m(pair: &MapPair, x: &Point, y: &Point) -> Result<f64> {
    Ok(pair.terms(x, y)?.m)
}

/// `N(x, y)`.
pub fn small_n(pair: &MapPair, x: &Point, y: &Point) -> Result<f64> {
    Ok(pair.terms(x, y)?.n)
}

/// The condition evaluated at one pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionResidual {
    pub x: Point,
    pub y: Point,
    /// `f(δ(Tx, Sy))`
    pub lhs: f64,
    /// `f(M) − φ(f(M)) + ψ(N)`
    pub rhs: f64,
    pub m: f64,
    pub n: f64,
    /// `rhs − lhs`
    pub residual: f64,
}

impl ConditionResidual {
    pub fn holds(&self, tol: f64) -> bool {
        self.residual >= -tol
    }
}

pub fn residual(pair: &MapPair, gauges: &GaugeTriple, x: &Point, y: &Point) -> Result<ConditionResidual> {
    let terms = pair.terms(x, y)?;
    let lhs = gauges.f.eval(terms.delta_tx_sy);
    let rhs = gauges.rhs(terms.m, terms.n);
    Ok(ConditionResidual {
        x: x.clone(),
        y: y.clone(),
        lhs,
        rhs,
        m: terms.m,
        n: terms.n,
        residual: rhs - lhs,
    })
}

/// Where sample points are drawn from. Pairs `(x, y)` range over the
/// product of the domain with itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DomainSpec {
    /// Product of closed intervals, one per coordinate.
    Box { bounds: Vec<(f64, f64)> },
    /// An explicit list of points, e.g. all points of a table space.
    Points { points: Vec<PointSpec> },
}

/// Serialized point: a number, a coordinate list, or (for table spaces) an
/// integer index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointSpec {
    Scalar(f64),
    Coords(Vec<f64>),
}

impl PointSpec {
    pub fn to_point(&self, space: &MetricSpace) -> Result<Point> {
        let p = match (self, space) {
            (PointSpec::Scalar(v), MetricSpace::FiniteTable(_)) => {
                if v.fract() != 0.0 || *v < 0.0 {
                    return Err(Error::invalid(format!(
                        "table point index {v} is not a nonnegative integer"
                    )));
                }
                Point::Index(*v as usize)
            }
            (PointSpec::Scalar(v), _) => Point::real(*v),
            (PointSpec::Coords(c), _) => Point::Coords(c.clone()),
        };
        space.check_point(&p)?;
        Ok(p)
    }
}

impl DomainSpec {
    pub fn interval(lo: f64, hi: f64) -> Self {
        DomainSpec::Box { bounds: vec![(lo, hi)] }
    }

    fn validate(&self, space: &MetricSpace) -> Result<()> {
        match self {
            DomainSpec::Box { bounds } => {
                let dim = space
                    .dim()
                    .ok_or_else(|| Error::invalid("box domains need a coordinate space"))?;
                if bounds.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: bounds.len(),
                    });
                }
                if bounds
                    .iter()
                    .any(|(lo, hi)| !(lo.is_finite() && hi.is_finite() && lo <= hi))
                {
                    return Err(Error::invalid("box domain bounds must be finite with lo <= hi"));
                }
                Ok(())
            }
            DomainSpec::Points { points } => {
                if points.is_empty() {
                    return Err(Error::invalid("point domain is empty"));
                }
                Ok(())
            }
        }
    }

    /// Grid points: `resolution` evenly spaced values per coordinate,
    /// endpoints included. Point domains ignore the resolution.
    pub fn grid_points(&self, space: &MetricSpace, resolution: usize) -> Result<Vec<Point>> {
        self.validate(space)?;
        match self {
            DomainSpec::Box { bounds } => {
                if resolution < 2 {
                    return Err(Error::invalid("grid resolution must be >= 2"));
                }
                let axes: Vec<Vec<f64>> = bounds.iter().map(|&(lo, hi)| linspace(lo, hi, resolution)).collect();
                let mut points = vec![Vec::with_capacity(axes.len())];
                for axis in &axes {
                    points = points
                        .into_iter()
                        .flat_map(|prefix| {
                            axis.iter().map(move |&v| {
                                let mut p = prefix.clone();
                                p.push(v);
                                p
                            })
                        })
                        .collect();
                }
                Ok(points.into_iter().map(Point::Coords).collect())
            }
            DomainSpec::Points { points } => points.iter().map(|p| p.to_point(space)).collect(),
        }
    }

    fn sample(&self, space: &MetricSpace, rng: &mut ChaCha8Rng) -> Result<Point> {
        match self {
            DomainSpec::Box { bounds } => Ok(Point::Coords(
                bounds
                    .iter()
                    .map(|&(lo, hi)| (lo + (hi - lo) * rng.gen::<f64>()).min(hi))
                    .collect(),
            )),
            DomainSpec::Points { points } => points[rng.gen_range(0..points.len())].to_point(space),
        }
    }
}

/// `n` evenly spaced values from `lo` to `hi`; the last one is exactly `hi`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SamplerSpec {
    /// Every pair of grid points.
    Grid { resolution: usize },
    /// `count` independent uniform pairs.
    Random { count: usize, seed: u64 },
}

impl Default for SamplerSpec {
    fn default() -> Self {
        SamplerSpec::Grid { resolution: 201 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyOptions {
    pub tol: f64,
    pub max_violations: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            tol: DEFAULT_TOL,
            max_violations: DEFAULT_MAX_VIOLATIONS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertVerdict {
    Certified,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificationReport {
    pub verdict: CertVerdict,
    pub min_residual: f64,
    pub argmin: (Point, Point),
    pub n_points: usize,
    /// Total number of violations, including those beyond the cap.
    pub n_violations: usize,
    /// The most negative residuals first, at most `max_violations`.
    pub violations: Vec<ConditionResidual>,
    pub tol: f64,
    pub domain: DomainSpec,
    pub sampler: SamplerSpec,
}

impl CertificationReport {
    pub fn certified(&self) -> bool {
        self.verdict == CertVerdict::Certified
    }

    pub fn violation_at(&self, x: &Point, y: &Point) -> Option<&ConditionResidual> {
        self.violations.iter().find(|v| v.x == *x && v.y == *y)
    }
}

fn pair_cmp(a: (&Point, &Point), b: (&Point, &Point)) -> Ordering {
    a.0.lex_cmp(b.0).then_with(|| a.1.lex_cmp(b.1))
}

/// Residual order: smaller first, ties broken lexicographically on `(x, y)`.
fn residual_cmp(a: &ConditionResidual, b: &ConditionResidual) -> Ordering {
    a.residual
        .total_cmp(&b.residual)
        .then_with(|| pair_cmp((&a.x, &a.y), (&b.x, &b.y)))
}

/// Partial certification summary. Merging is associative and commutative.
#[derive(Debug, Clone, Default)]
struct Summary {
    n: usize,
    min: Option<ConditionResidual>,
    n_violations: usize,
    violations: Vec<ConditionResidual>,
}

impl Summary {
    fn push(&mut self, r: ConditionResidual, tol: f64, cap: usize) {
        self.n += 1;
        if !r.holds(tol) {
            self.n_violations += 1;
            if cap > 0 {
                self.violations.push(r.clone());
                if self.violations.len() > 2 * cap {
                    self.trim(cap);
                }
            }
        }
        if self.min.as_ref().is_none_or(|m| residual_cmp(&r, m) == Ordering::Less) {
            self.min = Some(r);
        }
    }

    fn trim(&mut self, cap: usize) {
        self.violations.sort_by(residual_cmp);
        self.violations.truncate(cap);
    }

    fn merge(mut self, other: Summary, cap: usize) -> Summary {
        self.n += other.n;
        self.n_violations += other.n_violations;
        self.violations.extend(other.violations);
        self.trim(cap);
        self.min = match (self.min, other.min) {
            (Some(a), Some(b)) => Some(if residual_cmp(&b, &a) == Ordering::Less { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Evaluates the residual on every sampled pair and collects violations
/// (`residual < −tol`). The report is identical however the work is split.
pub fn certify(
    pair: &MapPair,
    gauges: &GaugeTriple,
    domain: &DomainSpec,
    sampler: &SamplerSpec,
    opts: &CertifyOptions,
) -> Result<CertificationReport> {
    if !(opts.tol >= 0.0) {
        return Err(Error::invalid("certification tolerance must be >= 0"));
    }
    let cap = opts.max_violations;
    let summary = match sampler {
        SamplerSpec::Grid { resolution } => {
            let points = domain.grid_points(&pair.space, *resolution)?;
            let rows: Vec<Result<Summary>> = points
                .par_iter()
                .map(|x| {
                    let mut s = Summary::default();
                    for y in &points {
                        s.push(residual(pair, gauges, x, y)?, opts.tol, cap);
                    }
                    s.trim(cap);
                    Ok(s)
                })
                .collect();
            merge_all(rows, cap)?
        }
        SamplerSpec::Random { count, seed } => {
            domain.validate(&pair.space)?;
            if *count == 0 {
                return Err(Error::invalid("random sampler needs count >= 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let pairs = (0..*count)
                .map(|_| {
                    Ok((
                        domain.sample(&pair.space, &mut rng)?,
                        domain.sample(&pair.space, &mut rng)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            let chunks: Vec<Result<Summary>> = pairs
                .par_chunks(1024)
                .map(|chunk| {
                    let mut s = Summary::default();
                    for (x, y) in chunk {
                        s.push(residual(pair, gauges, x, y)?, opts.tol, cap);
                    }
                    s.trim(cap);
                    Ok(s)
                })
                .collect();
            merge_all(chunks, cap)?
        }
    };
    let min = summary.min.expect("at least one sample");
    Ok(CertificationReport {
        verdict: if summary.n_violations == 0 {
            CertVerdict::Certified
        } else {
            CertVerdict::Violated
        },
        min_residual: min.residual,
        argmin: (min.x, min.y),
        n_points: summary.n,
        n_violations: summary.n_violations,
        violations: summary.violations,
        tol: opts.tol,
        domain: domain.clone(),
        sampler: sampler.clone(),
    })
}

fn merge_all(parts: Vec<Result<Summary>>, cap: usize) -> Result<Summary> {
    let mut acc = Summary::default();
    for part in parts {
        acc = acc.merge(part?, cap);
    }
    Ok(acc)
}
