fn main() {
    let out = onerow::cli::run(std::env::args().collect());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
