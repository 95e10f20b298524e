fn main() {
    std::process::exit(redcyc::cli::run(std::env::args_os()));
}
