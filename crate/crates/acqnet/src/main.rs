use std::process::exit;

fn main() {
    exit(acqnet::cli::run_cli(std::env::args().skip(1)));
}
