fn main() {
    std::process::exit(rfano_cli::run(std::env::args().collect()));
}
