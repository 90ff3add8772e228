fn main() {
    std::process::exit(nashfan::cli::run(std::env::args_os()));
}
