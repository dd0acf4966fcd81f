fn main() {
    std::process::exit(mixedct_cli::run(std::env::args_os()));
}
