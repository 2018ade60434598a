fn main() {
    std::process::exit(qroot::harness::cli::run(std::env::args_os()));
}
