fn main() {
    std::process::exit(symchar::cli::run());
}
