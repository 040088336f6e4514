//! Metric spaces, points, bounded sets and the two set functionals.
//!
//! For nonempty bounded sets `A`, `B` the crate works with
//!
//! * the gap `D(A, B) = inf { d(a, b) : a in A, b in B }`, and
//! * the sup-distance `δ(A, B) = sup { d(a, b) : a in A, b in B }`.
//!
//! Sets are either closed intervals on the real line or finite point sets.
//! Both functionals have exact closed forms for these shapes, so no
//! numerical optimisation is involved. A degenerate interval `[a, a]` is the
//! canonical singleton `{a}` on the real line.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Slack used when validating the triangle inequality of a distance table.
const TABLE_TRIANGLE_SLACK: f64 = 1e-12;

/// Pairwise distance table of a finite metric space.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceTable {
    n: usize,
    entries: Vec<f64>,
}

impl DistanceTable {
    /// Builds a table from a square matrix, checking the metric axioms on
    /// every pair and triple.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("distance table must have at least one point"));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "distance table row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        let table = DistanceTable { n, entries };
        for i in 0..n {
            if table.get(i, i) != 0.0 {
                return Err(Error::invalid(format!("distance table diagonal ({i},{i}) is not zero")));
            }
            for j in 0..n {
                let dij = table.get(i, j);
                if !dij.is_finite() || dij < 0.0 {
                    return Err(Error::invalid(format!(
                        "distance ({i},{j}) = {dij} is not a finite nonnegative number"
                    )));
                }
                if dij != table.get(j, i) {
                    return Err(Error::invalid(format!("distance table is not symmetric at ({i},{j})")));
                }
                if i != j && dij == 0.0 {
                    return Err(Error::invalid(format!(
                        "distinct points {i} and {j} are at distance zero"
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table.get(i, k) > table.get(i, j) + table.get(j, k) + TABLE_TRIANGLE_SLACK {
                        return Err(Error::invalid(format!(
                            "triangle inequality fails for points ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }
}

/// The ambient metric space `(E, d)`.
#[derive(Debug, Clone, PartialEq)]
pub enum MetricSpace {
    /// The real line with `d(x, y) = |x - y|`.
    RealLine,
    /// `R^dim` with the Euclidean norm.
    Euclidean(usize),
    /// `R^dim` with the max norm.
    Chebyshev(usize),
    /// `{0, .., n-1}` with an explicit distance table.
    FiniteTable(Arc<DistanceTable>),
}

impl MetricSpace {
    pub fn euclidean(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("euclidean space needs dim >= 1"));
        }
        Ok(MetricSpace::Euclidean(dim))
    }

    pub fn chebyshev(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("chebyshev space needs dim >= 1"));
        }
        Ok(MetricSpace::Chebyshev(dim))
    }

    pub fn finite_table(rows: Vec<Vec<f64>>) -> Result<Self> {
        Ok(MetricSpace::FiniteTable(Arc::new(DistanceTable::new(rows)?)))
    }

    /// Coordinate dimension; `None` for table spaces.
    pub fn dim(&self) -> Option<usize> {
        match self {
            MetricSpace::RealLine => Some(1),
            MetricSpace::Euclidean(d) | MetricSpace::Chebyshev(d) => Some(*d),
            MetricSpace::FiniteTable(_) => None,
        }
    }

    pub fn is_real_line(&self) -> bool {
        matches!(self, MetricSpace::RealLine)
    }

    /// Checks that `p` is a valid point of this space.
    pub fn check_point(&self, p: &Point) -> Result<()> {
        match (self, p) {
            (MetricSpace::FiniteTable(t), Point::Index(i)) => {
                if *i < t.len() {
                    Ok(())
                } else {
                    Err(Error::invalid(format!(
                        "point index {i} out of range for table of {} points",
                        t.len()
                    )))
                }
            }
            (MetricSpace::FiniteTable(_), Point::Coords(_)) => {
                Err(Error::invalid("coordinate point given for a finite-table space"))
            }
            (_, Point::Index(_)) => Err(Error::invalid("index point given for a coordinate space")),
            (space, Point::Coords(c)) => {
                let dim = space.dim().unwrap_or(0);
                if c.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: c.len(),
                    });
                }
                if c.iter().any(|v| !v.is_finite()) {
                    return Err(Error::invalid(format!("point {p} has non-finite coordinates")));
                }
                Ok(())
            }
        }
    }

    /// Checks that `set` is a valid bounded set of this space.
    pub fn check_set(&self, set: &BoundedSet) -> Result<()> {
        match set {
            BoundedSet::Interval { .. } if !self.is_real_line() => {
                Err(Error::invalid("interval sets are only valid on the real line"))
            }
            BoundedSet::Interval { .. } => Ok(()),
            BoundedSet::Finite(points) => points.iter().try_for_each(|p| self.check_point(p)),
        }
    }

    /// The metric `d(p, q)`.
    pub fn dist(&self, p: &Point, q: &Point) -> Result<f64> {
        self.check_point(p)?;
        self.check_point(q)?;
        Ok(self.dist_unchecked(p, q))
    }

    pub(crate) fn dist_unchecked(&self, p: &Point, q: &Point) -> f64 {
        match (self, p, q) {
            (MetricSpace::FiniteTable(t), Point::Index(i), Point::Index(j)) => t.get(*i, *j),
            (MetricSpace::RealLine, Point::Coords(a), Point::Coords(b)) => (a[0] - b[0]).abs(),
            (MetricSpace::Euclidean(_), Point::Coords(a), Point::Coords(b)) => {
                a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
            }
            (MetricSpace::Chebyshev(_), Point::Coords(a), Point::Coords(b)) => {
                a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
            }
            _ => unreachable!("points were validated against the space"),
        }
    }

    /// `D(A, B)`, the infimum of pairwise distances.
    pub fn gap(&self, a: &BoundedSet, b: &BoundedSet) -> Result<f64> {
        self.check_set(a)?;
        self.check_set(b)?;
        Ok(self.gap_unchecked(a, b))
    }

    pub(crate) fn gap_unchecked(&self, a: &BoundedSet, b: &BoundedSet) -> f64 {
        use BoundedSet::*;
        match (a, b) {
            (Interval { lo: a0, hi: a1 }, Interval { lo: b0, hi: b1 }) => (b0 - a1).max(a0 - b1).max(0.0),
            (Interval { lo, hi }, Finite(ps)) | (Finite(ps), Interval { lo, hi }) => ps
                .iter()
                .map(|p| {
                    let x = p.coord(0);
                    (lo - x).max(x - hi).max(0.0)
                })
                .fold(f64::INFINITY, f64::min),
            (Finite(ps), Finite(qs)) => {
                if self.is_real_line() {
                    min_cross_gap_sorted(&sorted_coords(ps), &sorted_coords(qs))
                } else {
                    let mut best = f64::INFINITY;
                    for p in ps {
                        for q in qs {
                            best = best.min(self.dist_unchecked(p, q));
                        }
                    }
                    best
                }
            }
        }
    }

    /// `δ(A, B)`, the supremum of pairwise distances.
    pub fn sup_dist(&self, a: &BoundedSet, b: &BoundedSet) -> Result<f64> {
        self.check_set(a)?;
        self.check_set(b)?;
        Ok(self.sup_dist_unchecked(a, b))
    }

    pub(crate) fn sup_dist_unchecked(&self, a: &BoundedSet, b: &BoundedSet) -> f64 {
        use BoundedSet::*;
        match (a, b) {
            (Interval { lo: a0, hi: a1 }, Interval { lo: b0, hi: b1 }) => (b1 - a0).max(a1 - b0),
            (Interval { lo, hi }, Finite(ps)) | (Finite(ps), Interval { lo, hi }) => ps
                .iter()
                .map(|p| {
                    let x = p.coord(0);
                    (x - lo).max(hi - x)
                })
                .fold(0.0, f64::max),
            (Finite(ps), Finite(qs)) => {
                if self.is_real_line() {
                    let (pmin, pmax) = coord_extremes(ps);
                    let (qmin, qmax) = coord_extremes(qs);
                    (qmax - pmin).max(pmax - qmin)
                } else {
                    let mut best: f64 = 0.0;
                    for p in ps {
                        for q in qs {
                            best = best.max(self.dist_unchecked(p, q));
                        }
                    }
                    best
                }
            }
        }
    }

    /// Monte-Carlo lower estimate of `δ(A, B)`.
    ///
    /// Draws `n_samples` points from each set and returns the largest
    /// distance over all cross pairs of the two samples. The result never
    /// exceeds [`MetricSpace::sup_dist`] and approaches it as `n_samples`
    /// grows.
    pub fn sup_dist_oracle(&self, a: &BoundedSet, b: &BoundedSet, n_samples: usize, seed: u64) -> Result<f64> {
        let (sa, sb) = self.sample_pair(a, b, n_samples, seed)?;
        if self.is_real_line() {
            // On the line the largest cross distance is between sample extremes.
            let (amin, amax) = min_max(&sa);
            let (bmin, bmax) = min_max(&sb);
            return Ok((bmax - amin).abs().max((amax - bmin).abs()));
        }
        let (pa, pb) = (self.distinct_samples(a, &sa), self.distinct_samples(b, &sb));
        let mut best: f64 = 0.0;
        for p in &pa {
            for q in &pb {
                best = best.max(self.dist_unchecked(p, q));
            }
        }
        Ok(best)
    }

    /// Monte-Carlo upper estimate of `D(A, B)`, built like
    /// [`MetricSpace::sup_dist_oracle`] but taking the smallest cross distance.
    pub fn gap_oracle(&self, a: &BoundedSet, b: &BoundedSet, n_samples: usize, seed: u64) -> Result<f64> {
        let (mut sa, mut sb) = self.sample_pair(a, b, n_samples, seed)?;
        if self.is_real_line() {
            sa.sort_unstable_by(f64::total_cmp);
            sb.sort_unstable_by(f64::total_cmp);
            return Ok(min_cross_gap_sorted(&sa, &sb));
        }
        let (pa, pb) = (self.distinct_samples(a, &sa), self.distinct_samples(b, &sb));
        let mut best = f64::INFINITY;
        for p in &pa {
            for q in &pb {
                best = best.min(self.dist_unchecked(p, q));
            }
        }
        Ok(best)
    }

    /// Samples `n` values per set. Real-line sets yield coordinates; other
    /// (finite) sets yield point indices encoded as `f64`.
    fn sample_pair(&self, a: &BoundedSet, b: &BoundedSet, n: usize, seed: u64) -> Result<(Vec<f64>, Vec<f64>)> {
        if n == 0 {
            return Err(Error::invalid("oracle needs n_samples >= 1"));
        }
        self.check_set(a)?;
        self.check_set(b)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let real = self.is_real_line();
        let sa = (0..n).map(|_| sample_one(a, real, &mut rng)).collect();
        let sb = (0..n).map(|_| sample_one(b, real, &mut rng)).collect();
        Ok((sa, sb))
    }

    fn distinct_samples(&self, set: &BoundedSet, draws: &[f64]) -> Vec<Point> {
        let BoundedSet::Finite(points) = set else {
            unreachable!("intervals only occur on the real line")
        };
        let mut hit = vec![false; points.len()];
        for &i in draws {
            hit[i as usize] = true;
        }
        points
            .iter()
            .zip(hit)
            .filter(|&(_, h)| h)
            .map(|(p, _)| p.clone())
            .collect()
    }
}

fn sample_one(set: &BoundedSet, real_line: bool, rng: &mut ChaCha8Rng) -> f64 {
    match set {
        BoundedSet::Interval { lo, hi } => {
            let u: f64 = rng.gen();
            (lo + (hi - lo) * u).min(*hi)
        }
        BoundedSet::Finite(points) => {
            let i = rng.gen_range(0..points.len());
            if real_line {
                points[i].coord(0)
            } else {
                i as f64
            }
        }
    }
}

fn min_max(xs: &[f64]) -> (f64, f64) {
    xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
        (lo.min(x), hi.max(x))
    })
}

fn coord_extremes(points: &[Point]) -> (f64, f64) {
    points
        .iter()
        .map(|p| p.coord(0))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

fn sorted_coords(points: &[Point]) -> Vec<f64> {
    let mut xs: Vec<f64> = points.iter().map(|p| p.coord(0)).collect();
    xs.sort_by(f64::total_cmp);
    xs
}

/// Smallest `|a - b|` over `a in xs`, `b in ys`, both sorted ascending.
fn min_cross_gap_sorted(xs: &[f64], ys: &[f64]) -> f64 {
    let (mut i, mut j) = (0, 0);
    let mut best = f64::INFINITY;
    while i < xs.len() && j < ys.len() {
        best = best.min((xs[i] - ys[j]).abs());
        if xs[i] < ys[j] {
            i += 1;
        } else {
            j += 1;
        }
    }
    best
}

/// A point of a [`MetricSpace`].
#[derive(Debug, Clone, PartialEq)]
pub enum Point {
    Coords(Vec<f64>),
    /// Index into a finite-table space.
    Index(usize),
}

impl Point {
    pub fn real(x: f64) -> Self {
        Point::Coords(vec![x])
    }

    pub fn coords(c: impl Into<Vec<f64>>) -> Self {
        Point::Coords(c.into())
    }

    pub fn index(i: usize) -> Self {
        Point::Index(i)
    }

    /// The single coordinate of a real-line point.
    pub fn as_real(&self) -> Option<f64> {
        match self {
            Point::Coords(c) if c.len() == 1 => Some(c[0]),
            _ => None,
        }
    }

    pub fn as_coords(&self) -> Option<&[f64]> {
        match self {
            Point::Coords(c) => Some(c),
            Point::Index(_) => None,
        }
    }

    #[inline]
    pub(crate) fn coord(&self, i: usize) -> f64 {
        match self {
            Point::Coords(c) => c[i],
            Point::Index(_) => panic!("index point has no coordinates"),
        }
    }

    /// Total lexicographic order used for deterministic tie-breaking.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        match (self, other) {
            (Point::Coords(a), Point::Coords(b)) => {
                for (x, y) in a.iter().zip(b) {
                    match x.total_cmp(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                a.len().cmp(&b.len())
            }
            (Point::Index(a), Point::Index(b)) => a.cmp(b),
            (Point::Index(_), Point::Coords(_)) => Ordering::Less,
            (Point::Coords(_), Point::Index(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Coords(c) if c.len() == 1 => write!(f, "{}", c[0]),
            Point::Coords(c) => {
                write!(f, "(")?;
                for (i, v) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
            Point::Index(i) => write!(f, "#{i}"),
        }
    }
}

/// Real-line points serialize as plain numbers, other coordinate points as
/// arrays and table points as integers.
impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Point::Coords(c) if c.len() == 1 => serializer.serialize_f64(c[0]),
            Point::Coords(c) => {
                let mut seq = serializer.serialize_seq(Some(c.len()))?;
                for v in c {
                    seq.serialize_element(v)?;
                }
                seq.end()
            }
            Point::Index(i) => serializer.serialize_u64(*i as u64),
        }
    }
}

/// A nonempty bounded subset of the space.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundedSet {
    /// Closed interval `[lo, hi]` on the real line, `lo <= hi`.
    Interval { lo: f64, hi: f64 },
    /// Nonempty finite point set.
    Finite(Vec<Point>),
}

impl BoundedSet {
    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::invalid(format!("interval [{lo}, {hi}] is unbounded")));
        }
        if lo > hi {
            return Err(Error::invalid(format!("interval [{lo}, {hi}] is empty")));
        }
        Ok(BoundedSet::Interval { lo, hi })
    }

    pub fn finite(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::invalid("finite set must contain at least one point"));
        }
        Ok(BoundedSet::Finite(points))
    }

    pub fn singleton(p: Point) -> Self {
        BoundedSet::Finite(vec![p])
    }

    /// The degenerate interval `[x, x]`.
    pub fn real_singleton(x: f64) -> Result<Self> {
        Self::interval(x, x)
    }

    /// Returns the unique element if the set is a singleton.
    pub fn as_singleton(&self) -> Option<Point> {
        match self {
            BoundedSet::Interval { lo, hi } if lo == hi => Some(Point::real(*lo)),
            BoundedSet::Finite(ps) if ps.iter().all(|p| *p == ps[0]) => Some(ps[0].clone()),
            _ => None,
        }
    }

    /// Interval bounds, if the set is an interval.
    pub fn bounds(&self) -> Option<(f64, f64)> {
        match self {
            BoundedSet::Interval { lo, hi } => Some((*lo, *hi)),
            BoundedSet::Finite(_) => None,
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            BoundedSet::Interval { lo, hi } => p.as_real().is_some_and(|x| *lo <= x && x <= *hi),
            BoundedSet::Finite(ps) => ps.contains(p),
        }
    }
}

impl fmt::Display for BoundedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundedSet::Interval { lo, hi } if lo == hi => write!(f, "{{{lo}}}"),
            BoundedSet::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
            BoundedSet::Finite(ps) => {
                write!(f, "{{")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// Parses the set literal syntax: `[lo, hi]` for intervals and
/// `{p1, p2, ...}` for finite sets, where each point is a number, a
/// parenthesized coordinate tuple `(a, b)`, or a table index `#i`.
impl FromStr for BoundedSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::invalid(format!(
                    "interval literal {s:?} needs exactly two bounds"
                )));
            }
            return BoundedSet::interval(parse_num(parts[0])?, parse_num(parts[1])?);
        }
        if let Some(body) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let mut points = Vec::new();
            let mut rest = body.trim();
            while !rest.is_empty() {
                let (item, tail) = if rest.starts_with('(') {
                    let close = rest
                        .find(')')
                        .ok_or_else(|| Error::invalid(format!("unclosed tuple in set literal {s:?}")))?;
                    (&rest[..=close], &rest[close + 1..])
                } else {
                    match rest.find(',') {
                        Some(i) => (&rest[..i], &rest[i..]),
                        None => (rest, ""),
                    }
                };
                points.push(parse_point(item.trim())?);
                rest = tail.trim_start();
                if let Some(r) = rest.strip_prefix(',') {
                    rest = r.trim_start();
                    if rest.is_empty() {
                        return Err(Error::invalid(format!("trailing comma in set literal {s:?}")));
                    }
                } else if !rest.is_empty() {
                    return Err(Error::invalid(format!("expected ',' in set literal {s:?}")));
                }
            }
            return BoundedSet::finite(points);
        }
        Err(Error::invalid(format!("unrecognized set literal {s:?}")))
    }
}

fn parse_num(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::invalid(format!("bad number {:?}", s.trim())))
}

fn parse_point(s: &str) -> Result<Point> {
    if let Some(idx) = s.strip_prefix('#') {
        return idx
            .parse::<usize>()
            .map(Point::Index)
            .map_err(|_| Error::invalid(format!("bad point index {s:?}")));
    }
    if let Some(body) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let coords = body.split(',').map(parse_num).collect::<Result<Vec<_>>>()?;
        return Ok(Point::Coords(coords));
    }
    Ok(Point::real(parse_num(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> BoundedSet {
        BoundedSet::interval(lo, hi).unwrap()
    }

    #[test]
    fn dist_examples() {
        let line = MetricSpace::RealLine;
        assert_eq!(
            line.dist(&Point::real(0.3), &Point::real(0.7)).unwrap(),
            (0.3f64 - 0.7).abs()
        );
        assert!((line.dist(&Point::real(0.3), &Point::real(0.7)).unwrap() - 0.4).abs() < 1e-12);
        assert_eq!(line.dist(&Point::real(0.25), &Point::real(0.25)).unwrap(), 0.0);
        let e2 = MetricSpace::euclidean(2).unwrap();
        assert_eq!(
            e2.dist(&Point::coords([0.0, 0.0]), &Point::coords([3.0, 4.0])).unwrap(),
            5.0
        );
        let c2 = MetricSpace::chebyshev(2).unwrap();
        assert_eq!(
            c2.dist(&Point::coords([0.0, 0.0]), &Point::coords([3.0, 4.0])).unwrap(),
            4.0
        );
    }

    #[test]
    fn dist_rejects_bad_points() {
        let e2 = MetricSpace::euclidean(2).unwrap();
        assert_eq!(
            e2.dist(&Point::coords([0.0]), &Point::coords([3.0, 4.0])),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
        assert!(MetricSpace::RealLine
            .dist(&Point::real(f64::NAN), &Point::real(0.0))
            .is_err());
        assert!(MetricSpace::RealLine.dist(&Point::index(0), &Point::real(0.0)).is_err());
        assert!(MetricSpace::euclidean(0).is_err());
    }

    #[test]
    fn finite_table_validation() {
        let ok =
            MetricSpace::finite_table(vec![vec![0.0, 1.0, 2.0], vec![1.0, 0.0, 1.0], vec![2.0, 1.0, 0.0]]).unwrap();
        assert_eq!(ok.dist(&Point::index(0), &Point::index(2)).unwrap(), 2.0);
        assert!(ok.dist(&Point::index(3), &Point::index(0)).is_err());
        // asymmetric
        assert!(MetricSpace::finite_table(vec![vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        // triangle violation: d(0,2)=5 > d(0,1)+d(1,2)=2
        assert!(
            MetricSpace::finite_table(vec![vec![0.0, 1.0, 5.0], vec![1.0, 0.0, 1.0], vec![5.0, 1.0, 0.0]]).is_err()
        );
        // nonzero diagonal
        assert!(MetricSpace::finite_table(vec![vec![1.0]]).is_err());
        assert!(MetricSpace::finite_table(vec![]).is_err());
    }

    #[test]
    fn gap_examples() {
        let line = MetricSpace::RealLine;
        assert_eq!(line.gap(&iv(0.0, 1.0), &iv(2.0, 3.0)).unwrap(), 1.0);
        assert_eq!(line.gap(&iv(2.0, 3.0), &iv(0.0, 1.0)).unwrap(), 1.0);
        assert_eq!(
            line.gap(&BoundedSet::singleton(Point::real(0.5)), &iv(0.0, 1.0))
                .unwrap(),
            0.0
        );
        // D(1, T 0.9) with T x = [x/3, x/2]
        let x = 0.9;
        let d = line
            .gap(&BoundedSet::singleton(Point::real(1.0)), &iv(x / 3.0, x / 2.0))
            .unwrap();
        assert!((d - 0.55).abs() < 1e-12);
    }

    #[test]
    fn sup_dist_examples() {
        let line = MetricSpace::RealLine;
        assert_eq!(line.sup_dist(&iv(0.0, 1.0), &iv(2.0, 3.0)).unwrap(), 3.0);
        // δ(x, Tx) with Tx = [x/4, x/2] at x = 1
        let d = line
            .sup_dist(&BoundedSet::singleton(Point::real(1.0)), &iv(0.25, 0.5))
            .unwrap();
        assert_eq!(d, 0.75);
        let z = BoundedSet::singleton(Point::real(0.4));
        assert_eq!(line.sup_dist(&z, &z).unwrap(), 0.0);
        assert_eq!(line.sup_dist(&iv(0.0, 1.0), &iv(0.0, 1.0)).unwrap(), 1.0);
    }

    #[test]
    fn intervals_rejected_off_the_line() {
        let e2 = MetricSpace::euclidean(2).unwrap();
        assert!(e2.gap(&iv(0.0, 1.0), &iv(0.0, 1.0)).is_err());
        let a = BoundedSet::singleton(Point::real(0.0));
        assert!(e2.sup_dist(&a, &a).is_err());
    }

    #[test]
    fn empty_sets_are_rejected() {
        assert!(BoundedSet::interval(1.0, 0.0).is_err());
        assert!(BoundedSet::interval(0.0, f64::INFINITY).is_err());
        assert!(BoundedSet::finite(vec![]).is_err());
        assert!(BoundedSet::interval(0.5, 0.5).is_ok());
    }

    #[test]
    fn finite_sets_in_plane() {
        let e2 = MetricSpace::euclidean(2).unwrap();
        let a = BoundedSet::finite(vec![Point::coords([0.0, 0.0]), Point::coords([1.0, 0.0])]).unwrap();
        let b = BoundedSet::finite(vec![Point::coords([4.0, 0.0]), Point::coords([4.0, 3.0])]).unwrap();
        assert_eq!(e2.gap(&a, &b).unwrap(), 3.0);
        assert_eq!(e2.sup_dist(&a, &b).unwrap(), 5.0);
    }

    #[test]
    fn oracle_examples() {
        let line = MetricSpace::RealLine;
        let v = line.sup_dist_oracle(&iv(0.0, 1.0), &iv(2.0, 3.0), 100_000, 7).unwrap();
        assert!((3.0 - 1e-3..=3.0).contains(&v), "{v}");
        let v = line.sup_dist_oracle(&iv(0.0, 1.0), &iv(0.0, 1.0), 100_000, 7).unwrap();
        assert!((1.0 - 1e-3..=1.0).contains(&v), "{v}");
        let a = BoundedSet::singleton(Point::real(0.2));
        let b = BoundedSet::singleton(Point::real(0.9));
        assert_eq!(
            line.sup_dist_oracle(&a, &b, 1, 0).unwrap(),
            line.dist(&Point::real(0.2), &Point::real(0.9)).unwrap()
        );
        assert!(line.sup_dist_oracle(&a, &b, 0, 0).is_err());
    }

    #[test]
    fn set_literals() {
        assert_eq!("[0, 0.5]".parse::<BoundedSet>().unwrap(), iv(0.0, 0.5));
        assert_eq!(
            "{1, 2.5}".parse::<BoundedSet>().unwrap(),
            BoundedSet::finite(vec![Point::real(1.0), Point::real(2.5)]).unwrap()
        );
        assert_eq!(
            "{(0, 1), (2, 3)}".parse::<BoundedSet>().unwrap(),
            BoundedSet::finite(vec![Point::coords([0.0, 1.0]), Point::coords([2.0, 3.0])]).unwrap()
        );
        assert_eq!(
            "{#2}".parse::<BoundedSet>().unwrap(),
            BoundedSet::singleton(Point::index(2))
        );
        assert!("{}".parse::<BoundedSet>().is_err());
        assert!("[1, 0]".parse::<BoundedSet>().is_err());
        assert!("{1,}".parse::<BoundedSet>().is_err());
        assert_eq!(iv(0.25, 0.25).to_string(), "{0.25}");
        assert_eq!(iv(0.0, 0.5).to_string(), "[0, 0.5]");
    }
}
