fn main() {
    std::process::exit(graphpow_harness::cli::run(std::env::args_os()));
}
