fn main() {
    std::process::exit(dielectric_casimir::cli::run(std::env::args_os()));
}
