macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(set_functionals, "set_functionals.rs");
example!(gauge_classes, "gauge_classes.rs");
example!(certify_grid, "certify_grid.rs");
example!(detect_violation, "detect_violation.rs");
example!(solve_endpoint, "solve_endpoint.rs");
example!(multistart, "multistart.rs");
example!(map_dsl, "map_dsl.rs");
example!(single_valued, "single_valued.rs");
example!(banach_preset, "banach_preset.rs");
example!(cli_config, "cli_config.rs");

#[test]
fn set_functionals_example_runs() {
    set_functionals::run_example().unwrap();
}

#[test]
fn gauge_classes_example_runs() {
    gauge_classes::run_example().unwrap();
}

#[test]
fn certify_grid_example_runs() {
    certify_grid::run_example().unwrap();
}

#[test]
fn detect_violation_example_runs() {
    detect_violation::run_example().unwrap();
}

#[test]
fn solve_endpoint_example_runs() {
    solve_endpoint::run_example().unwrap();
}

#[test]
fn multistart_example_runs() {
    multistart::run_example().unwrap();
}

#[test]
fn map_dsl_example_runs() {
    map_dsl::run_example().unwrap();
}

#[test]
fn single_valued_example_runs() {
    single_valued::run_example().unwrap();
}

#[test]
fn banach_preset_example_runs() {
    banach_preset::run_example().unwrap();
}

#[test]
fn cli_config_example_runs() {
    cli_config::run_example().unwrap();
}
