fn main() {
    std::process::exit(elnitsky_cli::run(std::env::args_os()));
}
