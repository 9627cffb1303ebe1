fn main() {
    let code = chern_calc::cli::run(std::env::args());
    std::process::exit(code);
}
