fn main() {
    std::process::exit(supersol::cli::run(std::env::args_os()));
}
