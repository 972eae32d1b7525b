fn main() {
    std::process::exit(mvlog::cli::dispatch(std::env::args_os()));
}
