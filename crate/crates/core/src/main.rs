fn main() {
    let code = ttcheck::cli::run(std::env::args(), &mut std::io::stdout());
    std::process::exit(code);
}
