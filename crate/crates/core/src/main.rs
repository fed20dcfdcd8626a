fn main() {
    std::process::exit(graphpoly::cli::main_with_args(std::env::args_os()));
}
