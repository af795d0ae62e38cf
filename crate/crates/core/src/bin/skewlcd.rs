fn main() {
    std::process::exit(skewlcd::cli::main_with_args(std::env::args_os()));
}
