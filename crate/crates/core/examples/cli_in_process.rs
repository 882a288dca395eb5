//! Drives the command-line interface without spawning a process.

use onerow::cli::run;

fn main() {
    for line in [
        "onerow compute --family C --n 2 --r 2 --format latex",
        "onerow compute --family D --n 2 --r 2 --via walgebra",
        "onerow tableaux --family D --n 2 --r 1 --format text",
        "onerow verify --suite principal --n 2 --r 2 --format text",
    ] {
        let out = run(line.split_whitespace().map(String::from).collect());
        println!("$ {line}\n{}[exit {}]\n", out.stdout, out.code);
    }
}
