fn main() {
    std::process::exit(idealtop::cli::run_cli(std::env::args_os()));
}
