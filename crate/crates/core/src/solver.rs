//! Alternating selection iteration for common end points.
//!
//! Starting from `x0` the solver builds
//!
//! ```text
//! A_0 = T x_0,  x_1 ∈ A_0,  A_1 = S x_1,  x_2 ∈ A_1,  A_2 = T x_2, ...
//! ```
//!
//! recording `δ(A_n, A_{n+1})` and `d(x_n, x_{n+1})` at every step. Under the
//! contraction condition the set gaps are non-increasing and tend to zero,
//! and the limit `z` satisfies `Tz = Sz = {z}`.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contraction::{MapPair, MultiMap};
use crate::error::{Error, Result};
use crate::gauge::{check_phi, GaugeFn, GaugeTriple, ProbeConfig};
use crate::metric::{BoundedSet, MetricSpace, Point};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 100_000;
/// Slack for the monotone set-gap check.
pub const MONOTONE_SLACK: f64 = 1e-12;

/// How the next iterate is picked from the current image set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SelectionStrategy {
    /// Point of the set closest to the current iterate.
    #[default]
    Nearest,
    /// Interval midpoint; for finite sets the point minimizing the largest
    /// distance to the others.
    Midpoint,
    /// Upper end of an interval; for finite sets the lexicographically
    /// largest point.
    SupEndpoint,
    /// Point of the set farthest from the current iterate.
    Farthest,
    /// Uniform random member, reproducible from the seed.
    Random { seed: u64 },
}

impl SelectionStrategy {
    pub const ALL_DETERMINISTIC: [SelectionStrategy; 4] = [
        SelectionStrategy::Nearest,
        SelectionStrategy::Midpoint,
        SelectionStrategy::SupEndpoint,
        SelectionStrategy::Farthest,
    ];

    /// Parses `nearest`, `midpoint`, `sup-endpoint`, `farthest`, `random`.
    pub fn parse(name: &str, seed: u64) -> Result<Self> {
        Ok(match name {
            "nearest" => SelectionStrategy::Nearest,
            "midpoint" => SelectionStrategy::Midpoint,
            "sup-endpoint" => SelectionStrategy::SupEndpoint,
            "farthest" => SelectionStrategy::Farthest,
            "random" => SelectionStrategy::Random { seed },
            other => return Err(Error::invalid(format!("unknown selection strategy {other:?}"))),
        })
    }

    fn select(&self, space: &MetricSpace, set: &BoundedSet, current: &Point, rng: &mut ChaCha8Rng) -> Point {
        match set {
            BoundedSet::Interval { lo, hi } => {
                let x = current.as_real().expect("intervals live on the real line");
                let v = match self {
                    SelectionStrategy::Nearest => x.clamp(*lo, *hi),
                    SelectionStrategy::Midpoint => (lo + (hi - lo) / 2.0).clamp(*lo, *hi),
                    SelectionStrategy::SupEndpoint => *hi,
                    SelectionStrategy::Farthest => {
                        if (x - lo).abs() > (hi - x).abs() {
                            *lo
                        } else {
                            *hi
                        }
                    }
                    SelectionStrategy::Random { .. } => (lo + (hi - lo) * rng.gen::<f64>()).clamp(*lo, *hi),
                };
                Point::real(v)
            }
            BoundedSet::Finite(points) => {
                let d = |p: &Point| space.dist_unchecked(p, current);
                let pick = match self {
                    SelectionStrategy::Nearest => argbest(points, |p| -d(p)),
                    SelectionStrategy::Farthest => argbest(points, d),
                    SelectionStrategy::Midpoint => argbest(points, |p| {
                        -points.iter().map(|q| space.dist_unchecked(p, q)).fold(0.0, f64::max)
                    }),
                    SelectionStrategy::SupEndpoint => points
                        .iter()
                        .enumerate()
                        .max_by(|a, b| a.1.lex_cmp(b.1).then(b.0.cmp(&a.0)))
                        .map(|(i, _)| i)
                        .unwrap(),
                    SelectionStrategy::Random { .. } => rng.gen_range(0..points.len()),
                };
                points[pick].clone()
            }
        }
    }
}

/// Index of the first point with the largest score.
fn argbest(points: &[Point], score: impl Fn(&Point) -> f64) -> usize {
    let mut best = (0, f64::NEG_INFINITY);
    for (i, p) in points.iter().enumerate() {
        let s = score(p);
        if s > best.1 {
            best = (i, s);
        }
    }
    best.0
}

/// Record of one run. `sets[n]` is `A_n`, the image of `iterates[n]`;
/// `set_gaps[n] = δ(A_n, A_{n+1})` and `step_dists[n] = d(x_n, x_{n+1})`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationTrace {
    pub iterates: Vec<Point>,
    #[serde(skip)]
    pub sets: Vec<BoundedSet>,
    pub set_gaps: Vec<f64>,
    pub step_dists: Vec<f64>,
    pub converged: bool,
    pub final_point: Point,
    pub iterations_used: usize,
}

impl IterationTrace {
    /// Writes `step,x,set_lo,set_hi,delta_gap,step_dist`, one row per
    /// iterate. Set bounds are empty for finite sets, and the final row has
    /// no gap or step. Multi-coordinate points are written `;`-separated.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "step,x,set_lo,set_hi,delta_gap,step_dist")?;
        for (n, x) in self.iterates.iter().enumerate() {
            let xs = match x {
                Point::Coords(c) => c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";"),
                Point::Index(i) => i.to_string(),
            };
            let (lo, hi) = match self.sets.get(n).and_then(|s| s.bounds()) {
                Some((lo, hi)) => (lo.to_string(), hi.to_string()),
                None => (String::new(), String::new()),
            };
            let gap = self.set_gaps.get(n).map(|v| v.to_string()).unwrap_or_default();
            let step = self.step_dists.get(n).map(|v| v.to_string()).unwrap_or_default();
            writeln!(out, "{n},{xs},{lo},{hi},{gap},{step}")?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveOptions {
    pub strategy: SelectionStrategy,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            strategy: SelectionStrategy::Nearest,
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

impl SolveOptions {
    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::invalid("solver tolerance must be > 0"));
        }
        if self.max_iter == 0 {
            return Err(Error::invalid("max_iter must be >= 1"));
        }
        Ok(())
    }
}

/// Runs the alternating iteration. `T` acts on even-indexed iterates and
/// `S` on odd ones. Stops once both `δ(A_n, A_{n+1})` and `d(x_n, x_{n+1})`
/// are within `tol`, or after `max_iter` steps with `converged = false`.
pub fn iterate(pair: &MapPair, x0: &Point, opts: &SolveOptions) -> Result<IterationTrace> {
    opts.validate()?;
    pair.space.check_point(x0)?;
    let seed = match opts.strategy {
        SelectionStrategy::Random { seed } => seed,
        _ => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let at_step = |step: usize| {
        move |e: Error| Error::Step {
            step,
            source: Box::new(e),
        }
    };

    let mut iterates = vec![x0.clone()];
    let mut sets = vec![pair.image_t(x0).map_err(at_step(0))?];
    let (mut set_gaps, mut step_dists) = (Vec::new(), Vec::new());
    let mut converged = false;

    for n in 0..opts.max_iter {
        let next = opts.strategy.select(&pair.space, &sets[n], &iterates[n], &mut rng);
        let image = if (n + 1) % 2 == 0 {
            pair.image_t(&next)
        } else {
            pair.image_s(&next)
        };
        let image = image.map_err(at_step(n + 1))?;
        let gap = pair.space.sup_dist_unchecked(&sets[n], &image);
        let step = pair.space.dist_unchecked(&iterates[n], &next);
        set_gaps.push(gap);
        step_dists.push(step);
        iterates.push(next);
        sets.push(image);
        if gap <= opts.tol && step <= opts.tol {
            converged = true;
            break;
        }
    }

    Ok(IterationTrace {
        final_point: iterates.last().unwrap().clone(),
        iterations_used: set_gaps.len(),
        iterates,
        sets,
        set_gaps,
        step_dists,
        converged,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EndpointResult {
    pub point: Point,
    /// `δ(Tz, z)`
    pub delta_t: f64,
    /// `δ(Sz, z)`
    pub delta_s: f64,
    pub is_endpoint: bool,
    pub tol: f64,
    /// A-posteriori tail estimate, when the trace and gauges allow one.
    pub tail_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<IterationTrace>,
}

impl EndpointResult {
    pub fn converged(&self) -> bool {
        self.trace.as_ref().is_none_or(|t| t.converged)
    }
}

/// Checks `Tz = Sz = {z}` up to `tol` via `δ(Tz, z)` and `δ(Sz, z)`.
pub fn verify_endpoint(pair: &MapPair, z: &Point, tol: f64) -> Result<EndpointResult> {
    let zs = BoundedSet::singleton(z.clone());
    let delta_t = pair.space.sup_dist_unchecked(&pair.image_t(z)?, &zs);
    let delta_s = pair.space.sup_dist_unchecked(&pair.image_s(z)?, &zs);
    Ok(EndpointResult {
        point: z.clone(),
        delta_t,
        delta_s,
        is_endpoint: delta_t.max(delta_s) <= tol,
        tol,
        tail_bound: None,
        trace: None,
    })
}

/// [`iterate`] followed by [`verify_endpoint`] on the last iterate. The
/// tail bound uses the empirical `Φ(iii)` constant of `gauges.phi`.
pub fn solve(pair: &MapPair, gauges: &GaugeTriple, x0: &Point, opts: &SolveOptions) -> Result<EndpointResult> {
    let trace = iterate(pair, x0, opts)?;
    let mut result = verify_endpoint(pair, &trace.final_point, opts.tol)?;
    result.is_endpoint &= trace.converged;
    if trace.set_gaps.len() >= 2 {
        let k = check_phi(&gauges.phi, &ProbeConfig::default())?.k;
        if let Some(k) = k.filter(|k| *k > 0.0 && *k < 1.0) {
            result.tail_bound = Some(tail_bound(&trace, k, &gauges.f)?);
        }
    }
    result.trace = Some(trace);
    Ok(result)
}

/// Whether `set_gaps` is non-increasing within [`MONOTONE_SLACK`]; on
/// failure returns the index of the first entry that increased.
pub fn check_monotone(trace: &IterationTrace) -> (bool, Option<usize>) {
    check_monotone_gaps(&trace.set_gaps)
}

pub fn check_monotone_gaps(gaps: &[f64]) -> (bool, Option<usize>) {
    match gaps.windows(2).position(|w| w[1] > w[0] + MONOTONE_SLACK) {
        Some(i) => (false, Some(i + 1)),
        None => (true, None),
    }
}

/// `((1 − k)/k) · f(δ(A_n, A_{n−1}))` at the last recorded gap. Valid as a
/// bound on `f(distance to the limit)` only when the contraction condition
/// holds with ratio constant `k`.
pub fn tail_bound(trace: &IterationTrace, k: f64, f: &GaugeFn) -> Result<f64> {
    if trace.set_gaps.len() < 2 {
        return Err(Error::invalid("tail bound needs at least two recorded gaps"));
    }
    tail_bound_from_gap(*trace.set_gaps.last().unwrap(), k, f)
}

pub fn tail_bound_from_gap(gap: f64, k: f64, f: &GaugeFn) -> Result<f64> {
    if !(k > 0.0 && k < 1.0) {
        return Err(Error::invalid(format!("tail bound needs 0 < k < 1, got {k}")));
    }
    Ok((1.0 - k) / k * f.eval(gap))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultistartResult {
    /// One representative per cluster, in order of first discovery.
    pub endpoints: Vec<Point>,
    pub unique: bool,
    /// Starts whose run did not converge to a verified end point.
    pub failed_starts: Vec<Point>,
    /// Per-start results, in start order.
    pub runs: Vec<EndpointResult>,
}

/// Solves from every start and clusters the verified end points within
/// `10 · tol`. Agreement across starts is evidence of uniqueness, not proof.
pub fn multistart_uniqueness_probe(
    pair: &MapPair,
    gauges: &GaugeTriple,
    starts: &[Point],
    opts: &SolveOptions,
) -> Result<MultistartResult> {
    if starts.is_empty() {
        return Err(Error::invalid("multistart needs at least one start"));
    }
    let runs = starts
        .par_iter()
        .map(|x0| solve(pair, gauges, x0, opts))
        .collect::<Result<Vec<_>>>()?;
    let radius = 10.0 * opts.tol;
    let mut endpoints: Vec<Point> = Vec::new();
    let mut failed_starts = Vec::new();
    for (x0, run) in starts.iter().zip(&runs) {
        if !run.is_endpoint {
            failed_starts.push(x0.clone());
            continue;
        }
        if !endpoints
            .iter()
            .any(|e| pair.space.dist_unchecked(e, &run.point) <= radius)
        {
            endpoints.push(run.point.clone());
        }
    }
    Ok(MultistartResult {
        unique: endpoints.len() == 1,
        endpoints,
        failed_starts,
        runs,
    })
}

/// A single-valued map `E → E`.
pub trait PointMap: Send + Sync {
    fn apply(&self, x: &Point) -> Result<Point>;
}

impl<F> PointMap for F
where
    F: Fn(&Point) -> Result<Point> + Send + Sync,
{
    fn apply(&self, x: &Point) -> Result<Point> {
        self(x)
    }
}

/// `x ↦ {g(x)}`. On singletons `δ` and `D` both reduce to `d`, so end points
/// of the lift are exactly fixed points of `g`.
pub struct Lifted<G>(pub G);

impl<G: PointMap> MultiMap for Lifted<G> {
    fn image(&self, x: &Point) -> Result<BoundedSet> {
        Ok(BoundedSet::singleton(self.0.apply(x)?))
    }
}

pub fn lift_single_valued<G: PointMap>(g: G) -> Lifted<G> {
    Lifted(g)
}

/// Lifts a real function `x ↦ g(x)` on the line.
pub fn lift_real<F>(g: F) -> Lifted<impl PointMap>
where
    F: Fn(f64) -> f64 + Send + Sync,
{
    Lifted(move |p: &Point| {
        let x = p
            .as_real()
            .ok_or_else(|| Error::invalid(format!("{p} is not a real-line point")))?;
        Ok(Point::real(g(x)))
    })
}
