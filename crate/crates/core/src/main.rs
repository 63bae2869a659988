use std::process::exit;

fn main() {
    exit(sinc_expdecay::cli::run());
}
