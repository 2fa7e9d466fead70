fn main() {
    std::process::exit(superyang::cli::run(std::env::args().collect()));
}
