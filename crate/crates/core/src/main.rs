fn main() {
    std::process::exit(picard_core::cli::run(std::env::args_os()));
}
