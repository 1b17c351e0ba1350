fn main() {
    std::process::exit(abeta_core::cli::run(std::env::args_os()));
}
