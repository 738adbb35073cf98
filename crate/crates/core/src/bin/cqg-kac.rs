fn main() {
    std::process::exit(cqg_kac::cli::main_with_args(std::env::args_os()));
}
