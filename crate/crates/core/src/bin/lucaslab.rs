fn main() {
    std::process::exit(lucaslab::cli::run(std::env::args_os()));
}
