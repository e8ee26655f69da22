fn main() {
    std::process::exit(psiab::cli::run());
}
