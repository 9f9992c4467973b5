fn main() {
    std::process::exit(quadpair::cli::main_with_args(std::env::args_os()));
}
