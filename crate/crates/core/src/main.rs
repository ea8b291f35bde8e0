fn main() {
    std::process::exit(mbar0n::cli::run(std::env::args_os()));
}
