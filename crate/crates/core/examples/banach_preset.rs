// The `f = id`, `φ(t) = (1 − k)t` preset, where the condition reads
// `δ(Tx, Sy) ≤ k·M(x, y) + ψ(N(x, y))`.

use weak_contraction::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pair = MapPair::new(
        MetricSpace::RealLine,
        interval_map(|x| (x / 4.0, x / 2.0)),
        interval_map(|x| (0.0, x / 5.0)),
    );
    let domain = DomainSpec::interval(0.0, 1.0);
    let grid = SamplerSpec::Grid { resolution: 101 };
    for k in [0.3, 0.5, 0.6, 0.9] {
        let gauges = GaugeTriple::banach_like(k)?;
        let r = certify(&pair, &gauges, &domain, &grid, &CertifyOptions::default())?;
        println!("k = {k}: {:?}, min residual {:.4}", r.verdict, r.min_residual);
    }
    assert!(GaugeTriple::banach_like(1.0).is_err());
    Ok(())
}

fn main() {
    run_example().expect("preset example failed");
}
