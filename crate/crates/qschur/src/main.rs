fn main() {
    std::process::exit(qschur::cli::run());
}
