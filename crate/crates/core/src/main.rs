fn main() {
    std::process::exit(twodim::cli::main_with_args(std::env::args_os()));
}
