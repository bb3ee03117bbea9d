fn main() {
    std::process::exit(qskew::cli::main_with_args(std::env::args_os()));
}
