fn main() {
    std::process::exit(quintuple::cli::main_from_env());
}
