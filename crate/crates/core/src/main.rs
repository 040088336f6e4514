fn main() {
    std::process::exit(weak_contraction::cli::run(std::env::args_os()));
}
