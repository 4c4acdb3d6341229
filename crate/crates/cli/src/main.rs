fn main() {
    std::process::exit(vh_cli::run(std::env::args_os()));
}
