fn main() {
    std::process::exit(cageforge::cli::run());
}
