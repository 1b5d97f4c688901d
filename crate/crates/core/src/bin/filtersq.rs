fn main() {
    std::process::exit(filtersq::cli::run());
}
