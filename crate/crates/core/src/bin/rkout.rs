fn main() {
    std::process::exit(rkout::cli::run(std::env::args_os()));
}
