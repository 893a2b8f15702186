fn main() {
    std::process::exit(kcl::cli::run());
}
