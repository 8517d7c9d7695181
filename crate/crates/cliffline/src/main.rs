fn main() {
    std::process::exit(cliffline::cli::run(std::env::args_os()));
}
