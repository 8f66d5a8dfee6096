fn main() {
    std::process::exit(toric_cox::cli::cli_main());
}
