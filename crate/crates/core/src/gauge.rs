//! Gauge functions and empirical class verifiers.
//!
//! The contraction condition is shaped by three scalar gauges on `[0, ∞)`:
//!
//! * `φ ∈ Φ`: vanishes only at 0, lower semicontinuous, and along any
//!   sequence `t_n → 0` eventually satisfies `φ(t_n) ≥ k t_n` for some
//!   `k ∈ (0, 1)`;
//! * `f ∈ Ω`: vanishes only at 0, non-decreasing, continuous, subadditive;
//! * `ψ ∈ Ψ`: vanishes only at 0, continuous, non-decreasing.
//!
//! Membership cannot be decided from point samples, so the verifiers run a
//! fixed probe schedule and report a witness for every failure. Built-in
//! gauges also carry an analytic membership table, which [`GaugeTriple::new`]
//! consults before falling back to the verifiers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper clamp for the reported `Φ(iii)` ratio constant.
const K_CLAMP: f64 = 1.0 - 1e-9;

/// A continuity or semicontinuity probe whose finest-scale defect exceeds
/// tolerance still passes if the defect shrank by this factor between the
/// middle and the finest scale.
const SHRINK_FACTOR: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", try_from = "RawGauge")]
pub enum GaugeFn {
    /// `t ↦ k t`
    Linear {
        k: f64,
    },
    /// `t ↦ ln(1 + t)`
    Log1p,
    /// `t ↦ t^p`
    Power {
        p: f64,
    },
    /// `t ↦ c t²`
    QuadScale {
        c: f64,
    },
    Identity,
    /// The zero function; as `ψ` it disables the `ψ(N)` term.
    Zero,
    /// Piecewise-linear interpolation of samples, constant outside the
    /// sampled range.
    Table {
        xs: Vec<f64>,
        ys: Vec<f64>,
    },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum RawGauge {
    Linear { k: f64 },
    Log1p,
    Power { p: f64 },
    QuadScale { c: f64 },
    Identity,
    Zero,
    Table { xs: Vec<f64>, ys: Vec<f64> },
}

impl TryFrom<RawGauge> for GaugeFn {
    type Error = Error;

    fn try_from(raw: RawGauge) -> Result<Self> {
        match raw {
            RawGauge::Linear { k } => GaugeFn::linear(k),
            RawGauge::Log1p => Ok(GaugeFn::Log1p),
            RawGauge::Power { p } => GaugeFn::power(p),
            RawGauge::QuadScale { c } => GaugeFn::quad_scale(c),
            RawGauge::Identity => Ok(GaugeFn::Identity),
            RawGauge::Zero => Ok(GaugeFn::Zero),
            RawGauge::Table { xs, ys } => GaugeFn::table(xs, ys),
        }
    }
}

impl GaugeFn {
    pub fn linear(k: f64) -> Result<Self> {
        if !(k.is_finite() && k >= 0.0) {
            return Err(Error::invalid(format!("linear gauge needs finite k >= 0, got {k}")));
        }
        Ok(GaugeFn::Linear { k })
    }

    pub fn power(p: f64) -> Result<Self> {
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::invalid(format!("power gauge needs finite p > 0, got {p}")));
        }
        Ok(GaugeFn::Power { p })
    }

    pub fn quad_scale(c: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::invalid(format!("quad-scale gauge needs finite c >= 0, got {c}")));
        }
        Ok(GaugeFn::QuadScale { c })
    }

    pub fn table(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.is_empty() || xs.len() != ys.len() {
            return Err(Error::invalid(
                "table gauge needs equally many (>= 1) abscissae and values",
            ));
        }
        if xs.iter().chain(&ys).any(|v| !v.is_finite()) || ys.iter().any(|&y| y < 0.0) || xs[0] < 0.0 {
            return Err(Error::invalid("table gauge samples must be finite and nonnegative"));
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("table gauge abscissae must be strictly increasing"));
        }
        Ok(GaugeFn::Table { xs, ys })
    }

    pub fn eval(&self, t: f64) -> f64 {
        match self {
            GaugeFn::Linear { k } => k * t,
            GaugeFn::Log1p => t.ln_1p(),
            GaugeFn::Power { p } => t.powf(*p),
            GaugeFn::QuadScale { c } => c * t * t,
            GaugeFn::Identity => t,
            GaugeFn::Zero => 0.0,
            GaugeFn::Table { xs, ys } => {
                let last = xs.len() - 1;
                if t <= xs[0] {
                    return ys[0];
                }
                if t >= xs[last] {
                    return ys[last];
                }
                let i = xs.partition_point(|&x| x <= t);
                let (x0, x1, y0, y1) = (xs[i - 1], xs[i], ys[i - 1], ys[i]);
                y0 + (y1 - y0) * (t - x0) / (x1 - x0)
            }
        }
    }

    /// Built-ins have known class membership; table gauges do not.
    pub fn is_trusted(&self) -> bool {
        !matches!(self, GaugeFn::Table { .. })
    }

    /// Analytic class membership of a built-in gauge, `None` for tables.
    pub fn analytic_membership(&self, class: GaugeClass) -> Option<bool> {
        use GaugeClass::*;
        let member = match self {
            GaugeFn::Table { .. } => return None,
            GaugeFn::Zero => false,
            GaugeFn::Linear { k } => *k > 0.0,
            GaugeFn::Log1p | GaugeFn::Identity => true,
            // t^p is subadditive and has t^(p-1) bounded below near 0 iff p <= 1
            GaugeFn::Power { p } => match class {
                Phi | Omega => *p <= 1.0,
                Psi => true,
            },
            GaugeFn::QuadScale { c } => class == Psi && *c > 0.0,
        };
        Some(member)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GaugeClass {
    Phi,
    Omega,
    Psi,
}

impl std::str::FromStr for GaugeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi" => Ok(GaugeClass::Phi),
            "omega" => Ok(GaugeClass::Omega),
            "psi" => Ok(GaugeClass::Psi),
            other => Err(Error::invalid(format!("unknown gauge class {other:?}"))),
        }
    }
}

/// Class condition labels. For `Ψ`: (i) zero only at 0, (ii) non-decreasing,
/// (iii) continuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Condition {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
    #[serde(rename = "iv")]
    IV,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A failed condition with the inputs exhibiting it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionFailure {
    pub condition: Condition,
    pub witness: Vec<f64>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassReport {
    pub class: GaugeClass,
    pub verdict: Verdict,
    /// First failed condition in label order.
    pub failed_condition: Option<Condition>,
    /// Witness inputs of `failed_condition`.
    pub witness: Option<Vec<f64>>,
    /// Every failed condition, in label order.
    pub failures: Vec<ConditionFailure>,
    /// Empirical `Φ(iii)` ratio constant, `Φ` reports only.
    pub k: Option<f64>,
    /// Heuristic caveats; a passing report with warnings is inconclusive.
    pub warnings: Vec<String>,
}

impl ClassReport {
    fn from_parts(class: GaugeClass, failures: Vec<ConditionFailure>, k: Option<f64>, warnings: Vec<String>) -> Self {
        let first = failures.first();
        ClassReport {
            class,
            verdict: if failures.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            failed_condition: first.map(|f| f.condition),
            witness: first.map(|f| f.witness.clone()),
            failures,
            k,
            warnings,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn fails(&self, condition: Condition) -> bool {
        self.failures.iter().any(|f| f.condition == condition)
    }
}

/// Probe schedule for the class verifiers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeConfig {
    /// Probe abscissae in `(0, t_max]`, ascending.
    pub grid: Vec<f64>,
    /// Start of the geometric sequence `t_j = start · 2^-j`.
    pub ratio_start: f64,
    /// Largest `j` used both for the ratio sequence and for neighbourhood
    /// refinement.
    pub ratio_scales: u32,
    /// Smallest ratio constant accepted for `Φ(iii)`.
    pub min_ratio: f64,
    pub tol: f64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            grid: log_grid(1e-6, 10.0, 64),
            ratio_start: 1.0,
            ratio_scales: 40,
            min_ratio: 1e-6,
            tol: 1e-9,
        }
    }
}

impl ProbeConfig {
    fn validate(&self) -> Result<()> {
        if self.grid.is_empty() || self.grid.iter().any(|&t| !(t.is_finite() && t > 0.0)) {
            return Err(Error::invalid("probe grid must be nonempty with points in (0, t_max]"));
        }
        if !(self.ratio_start > 0.0 && self.ratio_start.is_finite()) {
            return Err(Error::invalid("probe ratio_start must be positive"));
        }
        Ok(())
    }

    fn scale(&self, j: u32) -> f64 {
        (-(j as f64)).exp2()
    }
}

/// `n` log-spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.log10(), hi.log10());
    (0..n)
        .map(|i| {
            let s = if n == 1 { 0.0 } else { i as f64 / (n - 1) as f64 };
            10f64.powf(a + (b - a) * s)
        })
        .collect()
}

fn le_tol(a: f64, b: f64, tol: f64) -> bool {
    a <= b + tol * b.abs().max(1.0)
}

/// Zero at zero and positive elsewhere; the unit probe `t = 1` runs first.
fn check_zero_only(g: &GaugeFn, probe: &ProbeConfig) -> Option<ConditionFailure> {
    let g0 = g.eval(0.0);
    if g0.abs() > probe.tol || !g0.is_finite() {
        return Some(ConditionFailure {
            condition: Condition::I,
            witness: vec![0.0],
            message: format!("g(0) = {g0} is not zero"),
        });
    }
    std::iter::once(1.0).chain(probe.grid.iter().copied()).find_map(|t| {
        let v = g.eval(t);
        (!(v > 0.0 && v.is_finite())).then(|| ConditionFailure {
            condition: Condition::I,
            witness: vec![t],
            message: format!("g({t}) = {v} is not a positive finite value"),
        })
    })
}

fn check_monotone(g: &GaugeFn, probe: &ProbeConfig, condition: Condition) -> Option<ConditionFailure> {
    let mut ts = vec![0.0];
    ts.extend(probe.grid.iter().copied());
    ts.sort_by(f64::total_cmp);
    ts.windows(2).find_map(|w| {
        let (a, b) = (g.eval(w[0]), g.eval(w[1]));
        (!le_tol(a, b, probe.tol)).then(|| ConditionFailure {
            condition,
            witness: vec![w[0], w[1]],
            message: format!("g({}) = {a} > g({}) = {b}", w[0], w[1]),
        })
    })
}

/// Largest deviation of the neighbourhood samples below (`lower_only`) or
/// on either side of `g(t0)` at refinement level `j`.
fn neighbourhood_defect(g: &GaugeFn, t0: f64, h: f64, lower_only: bool) -> f64 {
    let g0 = g.eval(t0);
    let mut pts = vec![t0 + h];
    if t0 - h >= 0.0 {
        pts.push(t0 - h);
    }
    pts.iter()
        .map(|&t| {
            let d = g0 - g.eval(t);
            if lower_only {
                d.max(0.0)
            } else {
                d.abs()
            }
        })
        .fold(0.0, f64::max)
}

/// Shrinking-neighbourhood test shared by the continuity and lower
/// semicontinuity probes.
fn check_refinement(
    g: &GaugeFn,
    probe: &ProbeConfig,
    condition: Condition,
    lower_only: bool,
    warnings: &mut Vec<String>,
) -> Option<ConditionFailure> {
    let j_fine = probe.ratio_scales.max(2);
    let j_mid = j_fine / 2;
    let mut t0s = vec![0.0];
    t0s.extend(probe.grid.iter().copied());
    for t0 in t0s {
        let base = t0.max(1.0);
        let fine = neighbourhood_defect(g, t0, base * probe.scale(j_fine), lower_only);
        if fine <= probe.tol * g.eval(t0).abs().max(1.0) {
            continue;
        }
        let mid = neighbourhood_defect(g, t0, base * probe.scale(j_mid), lower_only);
        if fine <= SHRINK_FACTOR * mid {
            warnings.push(format!(
                "condition ({}) at t = {t0}: defect {fine:e} above tolerance but shrinking",
                condition_label(condition)
            ));
            continue;
        }
        let kind = if lower_only {
            "lower semicontinuity"
        } else {
            "continuity"
        };
        return Some(ConditionFailure {
            condition,
            witness: vec![t0],
            message: format!("{kind} defect {fine:e} at t = {t0} does not shrink under refinement"),
        });
    }
    None
}

fn check_subadditive(g: &GaugeFn, probe: &ProbeConfig) -> Option<ConditionFailure> {
    let pairs =
        std::iter::once((1.0, 1.0)).chain(probe.grid.iter().flat_map(|&x| probe.grid.iter().map(move |&y| (x, y))));
    for (x, y) in pairs {
        let (lhs, rhs) = (g.eval(x + y), g.eval(x) + g.eval(y));
        if !le_tol(lhs, rhs, probe.tol) {
            return Some(ConditionFailure {
                condition: Condition::IV,
                witness: vec![x, y],
                message: format!("g({}) = {lhs} > g({x}) + g({y}) = {rhs}", x + y),
            });
        }
    }
    None
}

fn condition_label(c: Condition) -> &'static str {
    match c {
        Condition::I => "i",
        Condition::II => "ii",
        Condition::III => "iii",
        Condition::IV => "iv",
    }
}

/// Verifies the three conditions of `Φ`.
///
/// Condition (iii) is probed along the single sequence
/// `t_j = ratio_start · 2^-j`, `j = 0..=ratio_scales`; the reported `k` is
/// the smallest ratio `φ(t_j)/t_j` seen, clamped below 1.
pub fn check_phi(g: &GaugeFn, probe: &ProbeConfig) -> Result<ClassReport> {
    probe.validate()?;
    let mut failures = Vec::new();
    let mut warnings = vec!["condition (iii) probed along one geometric sequence only".to_string()];
    failures.extend(check_zero_only(g, probe));
    failures.extend(check_refinement(g, probe, Condition::II, true, &mut warnings));

    let (mut k, mut at) = (f64::INFINITY, probe.ratio_start);
    for j in 0..=probe.ratio_scales {
        let t = probe.ratio_start * probe.scale(j);
        let r = g.eval(t) / t;
        if !(r >= k) {
            k = r;
            at = t;
        }
    }
    let k = if k.is_nan() { 0.0 } else { k.min(K_CLAMP) };
    if !(k >= probe.min_ratio) {
        failures.push(ConditionFailure {
            condition: Condition::III,
            witness: vec![at],
            message: format!("ratio g(t)/t = {k:e} at t = {at:e}; no k > 0 bounds it below"),
        });
    }
    Ok(ClassReport::from_parts(GaugeClass::Phi, failures, Some(k), warnings))
}

/// Verifies the four conditions of `Ω`.
pub fn check_omega(g: &GaugeFn, probe: &ProbeConfig) -> Result<ClassReport> {
    probe.validate()?;
    let mut warnings = Vec::new();
    let mut failures = Vec::new();
    failures.extend(check_zero_only(g, probe));
    failures.extend(check_monotone(g, probe, Condition::II));
    failures.extend(check_refinement(g, probe, Condition::III, false, &mut warnings));
    failures.extend(check_subadditive(g, probe));
    Ok(ClassReport::from_parts(GaugeClass::Omega, failures, None, warnings))
}

/// Verifies the conditions of `Ψ`.
pub fn check_psi(g: &GaugeFn, probe: &ProbeConfig) -> Result<ClassReport> {
    probe.validate()?;
    let mut warnings = Vec::new();
    let mut failures = Vec::new();
    failures.extend(check_zero_only(g, probe));
    failures.extend(check_monotone(g, probe, Condition::II));
    failures.extend(check_refinement(g, probe, Condition::III, false, &mut warnings));
    Ok(ClassReport::from_parts(GaugeClass::Psi, failures, None, warnings))
}

pub fn check_class(g: &GaugeFn, class: GaugeClass, probe: &ProbeConfig) -> Result<ClassReport> {
    match class {
        GaugeClass::Phi => check_phi(g, probe),
        GaugeClass::Omega => check_omega(g, probe),
        GaugeClass::Psi => check_psi(g, probe),
    }
}

/// The gauges `(f, φ, ψ)` of the contraction condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaugeTriple {
    pub f: GaugeFn,
    pub phi: GaugeFn,
    pub psi: GaugeFn,
}

impl GaugeTriple {
    /// Builds a triple after checking each member against its class:
    /// analytically for built-ins, by the default verifier for tables.
    /// `ψ = zero` is accepted as the marker for the `ψ`-free condition.
    pub fn new(f: GaugeFn, phi: GaugeFn, psi: GaugeFn) -> Result<Self> {
        let probe = ProbeConfig::default();
        let members = [
            (&f, GaugeClass::Omega, "f"),
            (&phi, GaugeClass::Phi, "phi"),
            (&psi, GaugeClass::Psi, "psi"),
        ];
        for (g, class, name) in members {
            if name == "psi" && *g == GaugeFn::Zero {
                continue;
            }
            let ok = match g.analytic_membership(class) {
                Some(m) => m,
                None => check_class(g, class, &probe)?.passed(),
            };
            if !ok {
                return Err(Error::invalid(format!("{name} = {g:?} is not in class {class:?}")));
            }
        }
        Ok(GaugeTriple { f, phi, psi })
    }

    /// Builds a triple without any class checks.
    pub fn unchecked(f: GaugeFn, phi: GaugeFn, psi: GaugeFn) -> Self {
        GaugeTriple { f, phi, psi }
    }

    /// `f = id`, `φ(t) = (1 - k) t`, `ψ = zero`; the condition then reads
    /// `δ(Tx, Sy) ≤ k M(x, y)`. Use [`GaugeTriple::with_psi`] to add a
    /// `ψ(N)` term.
    pub fn banach_like(k: f64) -> Result<Self> {
        if !(k > 0.0 && k < 1.0) {
            return Err(Error::invalid(format!("banach-like preset needs 0 < k < 1, got {k}")));
        }
        Ok(GaugeTriple {
            f: GaugeFn::Identity,
            phi: GaugeFn::Linear { k: 1.0 - k },
            psi: GaugeFn::Zero,
        })
    }

    pub fn with_psi(self, psi: GaugeFn) -> Result<Self> {
        GaugeTriple::new(self.f, self.phi, psi)
    }

    pub fn psi_disabled(&self) -> bool {
        self.psi == GaugeFn::Zero
    }

    /// `f(m) - φ(f(m)) + ψ(n)`.
    pub fn rhs(&self, m: f64, n: f64) -> f64 {
        let fm = self.f.eval(m);
        fm - self.phi.eval(fm) + self.psi.eval(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn probe() -> ProbeConfig {
        ProbeConfig::default()
    }

    #[test]
    fn default_grid_shape() {
        let g = probe().grid;
        assert_eq!(g.len(), 64);
        assert!((g[0] - 1e-6).abs() < 1e-18);
        assert!((g[63] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn phi_linear_passes_with_its_slope() {
        let r = check_phi(&GaugeFn::Linear { k: 0.25 }, &probe()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!((r.k.unwrap() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn phi_zero_fails_first_condition_at_one() {
        let r = check_phi(&GaugeFn::Zero, &probe()).unwrap();
        assert_eq!(r.failed_condition, Some(Condition::I));
        assert_eq!(r.witness, Some(vec![1.0]));
    }

    #[test]
    fn phi_square_fails_ratio_condition() {
        let r = check_phi(&GaugeFn::Power { p: 2.0 }, &probe()).unwrap();
        assert_eq!(r.failed_condition, Some(Condition::III));
        // ratio oracle: φ(t)/t = t along t = 2^-j, smallest at j = 40
        let t = 2f64.powi(-40);
        assert_eq!(r.witness, Some(vec![t]));
        assert!(r.k.unwrap() <= t * (1.0 + 1e-12));
    }

    #[test]
    fn phi_detects_lower_semicontinuity_defect() {
        // upward spike at t = 1, narrower than the finest probe radius
        let g = GaugeFn::table(
            vec![0.0, 1.0 - 1e-14, 1.0, 1.0 + 1e-14, 10.0],
            vec![0.0, 0.5, 5.0, 0.5, 5.0],
        )
        .unwrap();
        let probe = ProbeConfig {
            grid: vec![1.0],
            ..ProbeConfig::default()
        };
        let r = check_phi(&g, &probe).unwrap();
        assert_eq!(r.failed_condition, Some(Condition::II));
        assert_eq!(r.witness, Some(vec![1.0]));
    }

    #[test]
    fn omega_examples() {
        assert!(check_omega(&GaugeFn::Linear { k: 2.0 }, &probe()).unwrap().passed());
        assert!(check_omega(&GaugeFn::Log1p, &probe()).unwrap().passed());
        let r = check_omega(&GaugeFn::Power { p: 2.0 }, &probe()).unwrap();
        assert_eq!(r.failed_condition, Some(Condition::IV));
        assert_eq!(r.witness, Some(vec![1.0, 1.0]));
    }

    #[test]
    fn omega_detects_jump() {
        // jump of height 1 at t = 1, not removable by refinement
        let g = GaugeFn::table(vec![0.0, 1.0, 1.0 + 1e-15, 10.0], vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        let r = check_omega(&g, &probe()).unwrap();
        assert!(r.fails(Condition::III), "{r:?}");
    }

    #[test]
    fn psi_examples() {
        assert!(check_psi(&GaugeFn::QuadScale { c: 2.0 }, &probe()).unwrap().passed());
        let shifted = GaugeFn::table(vec![0.0, 1.0], vec![0.1, 1.1]).unwrap();
        let r = check_psi(&shifted, &probe()).unwrap();
        assert_eq!(r.failed_condition, Some(Condition::I));
        assert_eq!(r.witness, Some(vec![0.0]));

        let decreasing = GaugeFn::table(vec![0.0, 10.0], vec![5.0, 1.0]).unwrap();
        let r = check_psi(&decreasing, &probe()).unwrap();
        let mono = r
            .failures
            .iter()
            .find(|f| f.condition == Condition::II)
            .expect("monotonicity failure");
        assert_eq!(mono.witness.len(), 2);
        let (a, b) = (mono.witness[0], mono.witness[1]);
        assert!(a < b && decreasing.eval(a) > decreasing.eval(b));
    }

    #[test]
    fn builtin_memberships_agree_with_verifiers() {
        let gauges = [
            GaugeFn::Linear { k: 0.3 },
            GaugeFn::Linear { k: 2.0 },
            GaugeFn::Log1p,
            GaugeFn::Identity,
            GaugeFn::Power { p: 2.0 },
            GaugeFn::Power { p: 0.5 },
            GaugeFn::QuadScale { c: 2.0 },
            GaugeFn::Zero,
        ];
        for g in &gauges {
            for class in [GaugeClass::Phi, GaugeClass::Omega, GaugeClass::Psi] {
                let analytic = g.analytic_membership(class).unwrap();
                let empirical = check_class(g, class, &probe()).unwrap().passed();
                assert_eq!(analytic, empirical, "{g:?} {class:?}");
            }
        }
    }

    #[test]
    fn verifiers_are_deterministic() {
        let g = GaugeFn::Log1p;
        assert_eq!(check_phi(&g, &probe()).unwrap(), check_phi(&g, &probe()).unwrap());
    }

    #[test]
    fn banach_preset() {
        let t = GaugeTriple::banach_like(0.5).unwrap();
        assert_eq!(t.f, GaugeFn::Identity);
        assert_eq!(t.phi, GaugeFn::Linear { k: 0.5 });
        assert!(t.psi_disabled());
        assert!(GaugeTriple::banach_like(1.0).is_err());
        assert!(GaugeTriple::banach_like(0.0).is_err());
        let with = t.with_psi(GaugeFn::QuadScale { c: 2.0 }).unwrap();
        assert_eq!(with.psi, GaugeFn::QuadScale { c: 2.0 });
    }

    #[test]
    fn triple_rejects_wrong_classes() {
        assert!(GaugeTriple::new(GaugeFn::Power { p: 2.0 }, GaugeFn::Linear { k: 0.2 }, GaugeFn::Zero).is_err());
        assert!(GaugeTriple::new(GaugeFn::Identity, GaugeFn::Zero, GaugeFn::Zero).is_err());
        assert!(GaugeTriple::new(
            GaugeFn::Identity,
            GaugeFn::Linear { k: 0.2 },
            GaugeFn::QuadScale { c: 2.0 }
        )
        .is_ok());
    }

    #[test]
    fn gauge_json_syntax() {
        let g: GaugeFn = serde_json::from_str(r#"{"kind":"linear","k":0.25}"#).unwrap();
        assert_eq!(g, GaugeFn::Linear { k: 0.25 });
        let g: GaugeFn = serde_json::from_str(r#"{"kind":"quad-scale","c":2}"#).unwrap();
        assert_eq!(g, GaugeFn::QuadScale { c: 2.0 });
        for s in [
            r#"{"kind":"log1p"}"#,
            r#"{"kind":"identity"}"#,
            r#"{"kind":"zero"}"#,
            r#"{"kind":"power","p":2}"#,
        ] {
            serde_json::from_str::<GaugeFn>(s).unwrap();
        }
        assert!(serde_json::from_str::<GaugeFn>(r#"{"kind":"cosine"}"#).is_err());
        assert!(serde_json::from_str::<GaugeFn>(r#"{"kind":"power","p":-1}"#).is_err());
        assert!(serde_json::from_str::<GaugeFn>(r#"{"kind":"table","xs":[0,0],"ys":[0,1]}"#).is_err());
        let back = serde_json::to_string(&GaugeFn::QuadScale { c: 2.0 }).unwrap();
        assert_eq!(back, r#"{"kind":"quad-scale","c":2.0}"#);
    }

    #[test]
    fn table_interpolates() {
        let g = GaugeFn::table(vec![0.0, 1.0, 3.0], vec![0.0, 2.0, 3.0]).unwrap();
        assert_eq!(g.eval(0.5), 1.0);
        assert_eq!(g.eval(2.0), 2.5);
        assert_eq!(g.eval(5.0), 3.0);
        assert!(!g.is_trusted());
    }
}
