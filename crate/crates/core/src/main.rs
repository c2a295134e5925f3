use clap::Parser;

use fdiv::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let (text, code) = execute(cli);
    if code <= 1 {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
    std::process::exit(code);
}
