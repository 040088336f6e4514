// Single-valued maps lifted to singletons: end points become fixed points.

use weak_contraction::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let half = lift_real(|x| x / 2.0);
    let pair = MapPair::same(MetricSpace::RealLine, half);
    let gauges = GaugeTriple::banach_like(0.5)?;

    let report = certify(
        &pair,
        &gauges,
        &DomainSpec::interval(0.0, 1.0),
        &SamplerSpec::Grid { resolution: 101 },
        &CertifyOptions::default(),
    )?;
    println!("x/2 with k = 1/2: {:?}", report.verdict);

    let z = solve(&pair, &gauges, &Point::real(1.0), &SolveOptions::default())?;
    println!(
        "fixed point {} after {} steps",
        z.point,
        z.trace.as_ref().map_or(0, |t| t.iterations_used)
    );
    assert!(z.is_endpoint && z.point.as_real().unwrap().abs() < 1e-9);

    // Rotation by 90° in the plane has the origin as its only fixed point.
    let rot = lift_single_valued(|p: &Point| {
        let [x, y] = p
            .as_coords()
            .and_then(|c| <[f64; 2]>::try_from(c).ok())
            .ok_or_else(|| Error::InvalidInput("need a 2-D point".into()))?;
        Ok(Point::coords([-y / 2.0, x / 2.0]))
    });
    let plane = MapPair::same(MetricSpace::euclidean(2)?, rot);
    let z = solve(&plane, &gauges, &Point::coords([1.0, 1.0]), &SolveOptions::default())?;
    println!("scaled rotation: end point {}", z.point);
    Ok(())
}

fn main() {
    run_example().expect("single-valued example failed");
}
