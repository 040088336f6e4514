// Runs the empirical class verifiers on the built-in gauges.

use weak_contraction::gauge::check_class;
use weak_contraction::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let probe = ProbeConfig::default();
    let gauges = [
        GaugeFn::linear(0.3)?,
        GaugeFn::Log1p,
        GaugeFn::power(2.0)?,
        GaugeFn::quad_scale(2.0)?,
        GaugeFn::Zero,
    ];
    for g in &gauges {
        for class in [GaugeClass::Phi, GaugeClass::Omega, GaugeClass::Psi] {
            let r = check_class(g, class, &probe)?;
            match (&r.failed_condition, &r.witness) {
                (Some(c), Some(w)) => println!("{g:?} {class:?}: fail ({c:?} at {w:?})"),
                _ => println!("{g:?} {class:?}: pass"),
            }
        }
    }
    let k = check_phi(&GaugeFn::linear(0.3)?, &probe)?.k;
    println!("linear(0.3) ratio bound k = {k:?}");
    Ok(())
}

fn main() {
    run_example().expect("gauge classes example failed");
}
