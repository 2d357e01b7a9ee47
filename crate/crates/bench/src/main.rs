fn main() {
    std::process::exit(sta_bench::cli::main_with_args(std::env::args_os()));
}
