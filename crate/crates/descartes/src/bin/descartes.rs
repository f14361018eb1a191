fn main() {
    std::process::exit(descartes::cli::run(std::env::args()));
}
