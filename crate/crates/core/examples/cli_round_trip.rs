//! Drives the command-line layer in-process: construct, dump, reload, verify.

use clap::Parser;

use cayley_gradings::cli::{run, Cli};

fn main() {
    let dir = std::env::temp_dir().join("cayley-gradings-example");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("typeIII.json");
    let path = file.to_str().unwrap();
    let mut out = Vec::new();
    let steps: [&[&str]; 3] = [
        &["construct", "--grading", "typeIII", "--item", "2.c", "-o", path],
        &["verify", path],
        &["universal", path],
    ];
    for args in steps {
        let cli = Cli::parse_from(std::iter::once("cayley-gradings").chain(args.iter().copied()));
        let code = run(cli, &mut out).unwrap();
        println!("{} -> exit {code}", args[0]);
    }
    print!("{}", String::from_utf8(out).unwrap());
}
