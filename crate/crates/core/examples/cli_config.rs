// Drives the command-line entry point against a JSON run configuration.

use weak_contraction::cli;

const CONFIG: &str = r#"{
  "domain": [[0, 1]],
  "T": "otherwise -> [x/4, x/2]",
  "S": "otherwise -> [0, x/5]",
  "gauges": {"f": {"kind": "linear", "k": 2}, "phi": {"kind": "linear", "k": 0.25}},
  "sampler": {"kind": "grid", "resolution": 51},
  "solver": {"x0": [1.0], "strategy": "sup-endpoint"}
}"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("weak-contraction-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let config = dir.join("run.json");
    std::fs::write(&config, CONFIG)?;
    let out = dir.join("out");
    let (config, out) = (config.to_str().unwrap(), out.to_str().unwrap());

    let code = cli::run(["weak-contraction", "certify", config, "--out", out]);
    println!("certify exit {code}");
    let code = cli::run(["weak-contraction", "solve", config, "--out", out]);
    println!("solve exit {code}");
    print!(
        "{}",
        std::fs::read_to_string(dir.join("out/trace.csv"))?
            .lines()
            .take(3)
            .collect::<Vec<_>>()
            .join("\n")
    );
    println!();
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

fn main() {
    run_example().expect("CLI example failed");
}
