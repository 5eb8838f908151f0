fn main() {
    std::process::exit(xxzdm_cli::cli_main(std::env::args_os()));
}
