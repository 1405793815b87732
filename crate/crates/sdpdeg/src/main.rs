fn main() {
    std::process::exit(sdpdeg::cli::run());
}
