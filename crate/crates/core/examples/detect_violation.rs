// A pair that fails the condition near its second end point. The maps are
// `T = S` with `T 1 = {1}` and `T x = [x/3, x/2]` otherwise, gauged by
// `f = id`, `φ(t) = t/5`, `ψ(t) = 2t²`.

use weak_contraction::prelude::*;

const MAP: &str = "if x == 1 -> {1}; otherwise -> [x/3, x/2]";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t: MapDef = MAP.parse()?;
    let pair = MapPair::same(MetricSpace::RealLine, t);
    let gauges = GaugeTriple::new(GaugeFn::Identity, GaugeFn::linear(0.2)?, GaugeFn::quad_scale(2.0)?)?;

    let r = residual(&pair, &gauges, &Point::real(0.9), &Point::real(1.0))?;
    println!(
        "(0.9, 1): delta {} M {} N {} residual {:.3}",
        r.lhs, r.m, r.n, r.residual
    );

    let opts = CertifyOptions {
        max_violations: 5,
        ..Default::default()
    };
    let full = certify(
        &pair,
        &gauges,
        &DomainSpec::interval(0.0, 1.0),
        &SamplerSpec::default(),
        &opts,
    )?;
    println!(
        "[0, 1]: {:?}, {} violations, worst {:.4}",
        full.verdict, full.n_violations, full.min_residual
    );
    for v in &full.violations {
        println!("  x = {} y = {} residual {:.4}", v.x, v.y, v.residual);
    }

    let interior = certify(
        &pair,
        &gauges,
        &DomainSpec::interval(0.0, 0.995),
        &SamplerSpec::default(),
        &opts,
    )?;
    println!(
        "[0, 0.995]: {:?}, min residual {:.3e}",
        interior.verdict, interior.min_residual
    );
    assert!(!full.certified() && interior.certified());
    Ok(())
}

fn main() {
    run_example().expect("violation example failed");
}
