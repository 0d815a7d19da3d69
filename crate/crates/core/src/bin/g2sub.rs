fn main() {
    let (code, out) = g2_core::cli::run(std::env::args().skip(1));
    print!("{out}");
    std::process::exit(code);
}
