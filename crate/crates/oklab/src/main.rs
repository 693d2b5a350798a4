fn main() {
    std::process::exit(oklab::main_with_args(std::env::args_os()));
}
