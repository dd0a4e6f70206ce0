fn main() {
    std::process::exit(interlock::cli::run());
}
