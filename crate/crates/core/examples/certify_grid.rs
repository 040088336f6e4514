// Certifies `T x = [x/4, x/2]`, `S x = [0, x/5]` on a 201 × 201 grid with
// `f(t) = 2t`, `φ(t) = t/4` and no ψ term.

use std::time::Instant;

use weak_contraction::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pair = MapPair::new(
        MetricSpace::RealLine,
        interval_map(|x| (x / 4.0, x / 2.0)),
        interval_map(|x| (0.0, x / 5.0)),
    );
    let gauges = GaugeTriple::new(GaugeFn::linear(2.0)?, GaugeFn::linear(0.25)?, GaugeFn::Zero)?;

    let start = Instant::now();
    let report = certify(
        &pair,
        &gauges,
        &DomainSpec::interval(0.0, 1.0),
        &SamplerSpec::Grid { resolution: 201 },
        &CertifyOptions::default(),
    )?;
    println!(
        "{:?}: {} pairs, min residual {} at ({}, {}) in {:?}",
        report.verdict,
        report.n_points,
        report.min_residual,
        report.argmin.0,
        report.argmin.1,
        start.elapsed()
    );
    assert!(report.certified());

    let r = residual(&pair, &gauges, &Point::real(1.0), &Point::real(0.5))?;
    println!("at (1, 0.5): lhs {} rhs {} M {} N {}", r.lhs, r.rhs, r.m, r.n);
    Ok(())
}

fn main() {
    run_example().expect("certify example failed");
}
