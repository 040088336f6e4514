// Alternating iteration to a common end point, with its trace and an
// a-posteriori tail bound.

use weak_contraction::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pair = MapPair::new(
        MetricSpace::RealLine,
        interval_map(|x| (x / 4.0, x / 2.0)),
        interval_map(|x| (0.0, x / 5.0)),
    );
    let gauges = GaugeTriple::new(GaugeFn::linear(2.0)?, GaugeFn::linear(0.25)?, GaugeFn::Zero)?;
    let opts = SolveOptions {
        strategy: SelectionStrategy::SupEndpoint,
        ..Default::default()
    };

    let result = solve(&pair, &gauges, &Point::real(1.0), &opts)?;
    let trace = result.trace.as_ref().expect("solve records the trace");
    for (n, x) in trace.iterates.iter().take(6).enumerate() {
        println!("x{n} = {x}");
    }
    println!(
        "end point {} after {} steps, delta(Tz, z) = {}, delta(Sz, z) = {}",
        result.point, trace.iterations_used, result.delta_t, result.delta_s
    );
    println!(
        "monotone gaps: {:?}, tail bound {:?}",
        check_monotone(trace),
        result.tail_bound
    );
    assert!(result.is_endpoint);

    let mut csv = Vec::new();
    trace.write_csv(&mut csv)?;
    print!(
        "{}",
        String::from_utf8(csv)?.lines().take(4).collect::<Vec<_>>().join("\n")
    );
    println!();
    Ok(())
}

fn main() {
    run_example().expect("solver example failed");
}
