//! JSON run configuration shared by the command-line entry point and the
//! examples.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::contraction::{CertifyOptions, DomainSpec, MapPair, MultiMap, PointSpec, SamplerSpec};
use crate::dsl::MapDef;
use crate::error::{Error, Result};
use crate::gauge::{GaugeFn, GaugeTriple};
use crate::metric::{BoundedSet, MetricSpace, Point};
use crate::solver::{SelectionStrategy, SolveOptions, DEFAULT_MAX_ITER, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SpaceConfig {
    #[default]
    RealLine,
    Euclidean {
        dim: usize,
    },
    Chebyshev {
        dim: usize,
    },
    FiniteTable {
        distances: Vec<Vec<f64>>,
    },
}

impl SpaceConfig {
    pub fn build(&self) -> Result<MetricSpace> {
        match self {
            SpaceConfig::RealLine => Ok(MetricSpace::RealLine),
            SpaceConfig::Euclidean { dim } => MetricSpace::euclidean(*dim),
            SpaceConfig::Chebyshev { dim } => MetricSpace::chebyshev(*dim),
            SpaceConfig::FiniteTable { distances } => MetricSpace::finite_table(distances.clone()),
        }
    }
}

/// A map given either as DSL source (real line only) or as an explicit
/// list of `point -> set literal` entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapConfig {
    Dsl(String),
    Table(Vec<MapEntry>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub x: PointSpec,
    pub image: String,
}

/// Lookup map built from explicit entries; points without an entry fail.
#[derive(Debug, Clone)]
pub struct TableMap {
    entries: Vec<(Point, BoundedSet)>,
}

impl MultiMap for TableMap {
    fn image(&self, x: &Point) -> Result<BoundedSet> {
        self.entries
            .iter()
            .find(|(p, _)| p == x)
            .map(|(_, s)| s.clone())
            .ok_or_else(|| Error::MapEval {
                x: x.to_string(),
                message: "no entry for this point".into(),
            })
    }
}

impl MapConfig {
    pub fn build(&self, space: &MetricSpace) -> Result<Arc<dyn MultiMap>> {
        match self {
            MapConfig::Dsl(src) => {
                if !space.is_real_line() {
                    return Err(Error::Config("DSL maps are only available on the real line".into()));
                }
                let def: MapDef = src.parse()?;
                Ok(Arc::new(def))
            }
            MapConfig::Table(entries) => {
                let entries = entries
                    .iter()
                    .map(|e| {
                        let p = e.x.to_point(space)?;
                        let set: BoundedSet = e.image.parse()?;
                        space.check_set(&set)?;
                        Ok((p, set))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Arc::new(TableMap { entries }))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DomainConfig {
    Bounds(Vec<(f64, f64)>),
    Spec(DomainSpec),
}

impl DomainConfig {
    pub fn spec(&self) -> DomainSpec {
        match self {
            DomainConfig::Bounds(b) => DomainSpec::Box { bounds: b.clone() },
            DomainConfig::Spec(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeConfig {
    pub f: GaugeFn,
    pub phi: GaugeFn,
    #[serde(default = "zero_gauge")]
    pub psi: GaugeFn,
}

fn zero_gauge() -> GaugeFn {
    GaugeFn::Zero
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CertifyConfig {
    pub tol: f64,
    pub max_violations: usize,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        let d = CertifyOptions::default();
        CertifyConfig {
            tol: d.tol,
            max_violations: d.max_violations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverConfig {
    pub x0: Vec<PointSpec>,
    pub strategy: String,
    pub seed: u64,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            x0: Vec::new(),
            strategy: "nearest".into(),
            seed: 0,
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    pub dir: PathBuf,
    pub report: String,
    pub result: String,
    pub trace: String,
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig {
            dir: PathBuf::from("out"),
            report: "certify-report.json".into(),
            result: "solve-result.json".into(),
            trace: "trace.csv".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub space: SpaceConfig,
    pub domain: DomainConfig,
    #[serde(rename = "T")]
    pub t: MapConfig,
    /// Defaults to `"same-as-T"`.
    #[serde(rename = "S", default)]
    pub s: Option<MapConfig>,
    pub gauges: GaugeConfig,
    #[serde(default)]
    pub sampler: SamplerSpec,
    #[serde(default)]
    pub certify: CertifyConfig,
    #[serde(default)]
    pub solver: SolverConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

/// Everything a run needs, built and validated from a [`RunConfig`].
#[derive(Debug, Clone)]
pub struct Run {
    pub pair: MapPair,
    pub gauges: GaugeTriple,
    pub domain: DomainSpec,
    pub sampler: SamplerSpec,
    pub certify: CertifyOptions,
    pub starts: Vec<Point>,
    pub solve: SolveOptions,
    pub output: OutputConfig,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn build(&self) -> Result<Run> {
        let space = self.space.build()?;
        let t = self.t.build(&space)?;
        let s = match &self.s {
            None => t.clone(),
            Some(MapConfig::Dsl(src)) if src.trim() == "same-as-T" => t.clone(),
            Some(m) => m.build(&space)?,
        };
        let gauges = GaugeTriple::new(self.gauges.f.clone(), self.gauges.phi.clone(), self.gauges.psi.clone())?;
        if let SamplerSpec::Grid { resolution } = self.sampler {
            if resolution < 2 {
                return Err(Error::Config("sampler resolution must be >= 2".into()));
            }
        }
        if !(self.solver.tol > 0.0) {
            return Err(Error::Config("solver tol must be > 0".into()));
        }
        let domain = self.domain.spec();
        if let (DomainSpec::Box { bounds }, MapConfig::Dsl(_)) = (&domain, &self.t) {
            if let [(lo, hi)] = bounds.as_slice() {
                for def in self.dsl_defs()? {
                    def.check_domain(*lo, *hi, 101)?;
                }
            }
        }
        let starts = self
            .solver
            .x0
            .iter()
            .map(|p| p.to_point(&space))
            .collect::<Result<Vec<_>>>()?;
        Ok(Run {
            pair: MapPair::from_arcs(space, t, s),
            gauges,
            domain,
            sampler: self.sampler.clone(),
            certify: CertifyOptions {
                tol: self.certify.tol,
                max_violations: self.certify.max_violations,
            },
            starts,
            solve: SolveOptions {
                strategy: SelectionStrategy::parse(&self.solver.strategy, self.solver.seed)?,
                tol: self.solver.tol,
                max_iter: self.solver.max_iter,
            },
            output: self.output.clone(),
        })
    }

    fn dsl_defs(&self) -> Result<Vec<MapDef>> {
        let mut defs = Vec::new();
        for m in [Some(&self.t), self.s.as_ref()].into_iter().flatten() {
            if let MapConfig::Dsl(src) = m {
                if src.trim() != "same-as-T" {
                    defs.push(src.parse::<MapDef>()?);
                }
            }
        }
        Ok(defs)
    }
}
