fn main() {
    std::process::exit(layerlab::cli::run());
}
