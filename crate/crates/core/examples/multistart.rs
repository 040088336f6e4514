// Multistart probe: one cluster for a pair with a unique end point, two
// for the pair with end points 0 and 1.

use weak_contraction::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let unique = MapPair::new(
        MetricSpace::RealLine,
        interval_map(|x| (x / 4.0, x / 2.0)),
        interval_map(|x| (0.0, x / 5.0)),
    );
    let gauges = GaugeTriple::new(GaugeFn::linear(2.0)?, GaugeFn::linear(0.25)?, GaugeFn::Zero)?;
    let starts: Vec<Point> = [0.05, 0.2, 0.45, 0.8, 1.0].map(Point::real).to_vec();
    let r = multistart_uniqueness_probe(&unique, &gauges, &starts, &SolveOptions::default())?;
    println!("{} starts -> end points {}", starts.len(), show(&r.endpoints));
    assert!(r.unique);

    let t: MapDef = "if x == 1 -> {1}; otherwise -> [x/3, x/2]".parse()?;
    let two = MapPair::same(MetricSpace::RealLine, t);
    let gauges = GaugeTriple::new(GaugeFn::Identity, GaugeFn::linear(0.2)?, GaugeFn::quad_scale(2.0)?)?;
    let r = multistart_uniqueness_probe(
        &two,
        &gauges,
        &[Point::real(0.9), Point::real(1.0)],
        &SolveOptions::default(),
    )?;
    println!("from 0.9 and 1 -> end points {}", show(&r.endpoints));
    assert_eq!(r.endpoints.len(), 2);
    Ok(())
}

fn show(points: &[Point]) -> String {
    points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() {
    run_example().expect("multistart example failed");
}
