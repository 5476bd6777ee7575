fn main() {
    std::process::exit(logcoeff::cli::run());
}
