//! Driving the command-line interface in-process.
//!
//! Equivalent to `simembed gen ...`, `simembed analyze ...` and
//! `simembed embed ...` in a scratch directory.
//!
//! Run with `cargo run --example cli`.

use simembed::cli::run;

fn main() {
    let dir = std::env::temp_dir().join(format!("simembed-cli-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let (pair, svg) = (path("k5.pair"), path("k5.svg"));

    let commands: [Vec<&str>; 4] = [
        vec!["simembed", "gen", "--example", "k5sub", "--out", &pair],
        vec!["simembed", "analyze", &pair],
        vec!["simembed", "embed", &pair, "--class", "strong", "--out", &svg],
        vec!["simembed", "embed", &pair, "--class", "weak", "--out", &svg],
    ];
    for args in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&args, &mut out, &mut err);
        println!("$ {}  -> exit {code}", args[1..].join(" "));
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
