fn main() {
    std::process::exit(multilog::cli::run(std::env::args_os()));
}
