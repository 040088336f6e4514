// Piecewise set-valued maps written in the text format, including the
// positioned errors for malformed sources.

use weak_contraction::dsl::{self, MapDef};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let def: MapDef = "if x < 0.5 -> [0, x]; if x >= 0.5 and x < 1 -> [x/2, min(x, 0.75)]; otherwise -> {1}".parse()?;
    for x in [0.25, 0.6, 1.0] {
        println!("T({x}) = {}", def.eval(x)?);
    }
    println!("printed back: {def}");
    assert_eq!(def.to_string().parse::<MapDef>()?, def);

    for bad in [
        "otherwise -> [x/4, x/2",
        "if x >> 1 -> {1}",
        "otherwise -> [0, 1]; if x == 0 -> {0}",
    ] {
        let err = dsl::parse(bad).unwrap_err();
        println!("{bad:?}: {err}");
    }

    // Parses, but lo > hi at x = 1.
    let swapped: MapDef = "otherwise -> [x/2, x/4]".parse()?;
    println!("{}", swapped.check_domain(0.0, 1.0, 11).unwrap_err());
    Ok(())
}

fn main() {
    run_example().expect("DSL example failed");
}
