fn main() {
    std::process::exit(specht_mf::cli::run(std::env::args_os()));
}
