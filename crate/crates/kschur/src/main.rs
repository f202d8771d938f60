fn main() {
    std::process::exit(kschur::cli::run(std::env::args_os()));
}
