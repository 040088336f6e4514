// Gap `D` and sup-distance `δ` between bounded sets, closed form against
// a Monte-Carlo estimate.

use weak_contraction::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let line = MetricSpace::RealLine;
    let a: BoundedSet = "[0, 1]".parse()?;
    let b: BoundedSet = "[2, 5]".parse()?;
    let gap = line.gap(&a, &b)?;
    let sup = line.sup_dist(&a, &b)?;
    println!("D({a}, {b}) = {gap}, delta = {sup}");
    assert_eq!((gap, sup), (1.0, 5.0));

    let mc = line.sup_dist_oracle(&a, &b, 10_000, 1)?;
    println!("Monte-Carlo delta estimate: {mc:.6}");
    assert!(mc <= sup && sup - mc < 1e-2);

    let plane = MetricSpace::euclidean(2)?;
    let p: BoundedSet = "{(0, 0), (3, 4)}".parse()?;
    let q: BoundedSet = "{(0, 0)}".parse()?;
    println!(
        "in the plane: D = {}, delta = {}",
        plane.gap(&p, &q)?,
        plane.sup_dist(&p, &q)?
    );

    // δ(A, A) is the diameter, so it vanishes only on singletons.
    assert_eq!(line.sup_dist(&a, &a)?, 1.0);
    Ok(())
}

fn main() {
    run_example().expect("set functionals example failed");
}
