//! Certification of generalized weakly contractive conditions for pairs of
//! set-valued maps, and computation of their common end points.
//!
//! A pair `T, S : E → B(E)` of maps into the nonempty bounded subsets of a
//! metric space is checked against
//!
//! ```text
//! f(δ(Tx, Sy)) ≤ f(M(x, y)) − φ(f(M(x, y))) + ψ(N(x, y))
//! ```
//!
//! with gauges `f`, `φ`, `ψ` (see [`gauge`]). When the condition holds, the
//! alternating selection iteration in [`solver`] converges to a point `z`
//! with `Tz = Sz = {z}`.
//!
//! ```
//! use weak_contraction::prelude::*;
//!
//! let t: MapDef = "otherwise -> [x/4, x/2]".parse().unwrap();
//! let s: MapDef = "otherwise -> [0, x/5]".parse().unwrap();
//! let pair = MapPair::new(MetricSpace::RealLine, t, s);
//! let gauges = GaugeTriple::new(
//!     GaugeFn::Linear { k: 2.0 },
//!     GaugeFn::Linear { k: 0.25 },
//!     GaugeFn::Zero,
//! ).unwrap();
//!
//! let report = certify(
//!     &pair,
//!     &gauges,
//!     &DomainSpec::interval(0.0, 1.0),
//!     &SamplerSpec::Grid { resolution: 51 },
//!     &CertifyOptions::default(),
//! ).unwrap();
//! assert!(report.certified());
//!
//! let opts = SolveOptions { strategy: SelectionStrategy::SupEndpoint, ..Default::default() };
//! let z = solve(&pair, &gauges, &Point::real(1.0), &opts).unwrap();
//! assert!(z.is_endpoint);
//! ```

// `!(x > 0.0)` deliberately rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod contraction;
pub mod dsl;
pub mod error;
pub mod gauge;
pub mod metric;
pub mod solver;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::contraction::{
        big_m, certify, interval_map, residual, small_n, CertificationReport, CertifyOptions, ConditionResidual,
        DomainSpec, MapPair, MultiMap, SamplerSpec,
    };
    pub use crate::dsl::MapDef;
    pub use crate::error::{Error, Result};
    pub use crate::gauge::{check_omega, check_phi, check_psi, GaugeClass, GaugeFn, GaugeTriple, ProbeConfig};
    pub use crate::metric::{BoundedSet, MetricSpace, Point};
    pub use crate::solver::{
        check_monotone, iterate, lift_real, lift_single_valued, multistart_uniqueness_probe, solve, tail_bound,
        verify_endpoint, SelectionStrategy, SolveOptions,
    };
}
