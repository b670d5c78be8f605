//! Reading, validating and writing pair files.
//!
//! Run with `cargo run --example pair_files`.

use simembed::pair::{parse_pair_file, validate_pair, write_pair_file, PairFileError, RawPair, Side};

const TEXT: &str = "\
# two rows and two columns of a 2x2 grid
element a Row1 Col1
element b Row1 Col2
element c Row2 Col1
element d Row2 Col2
";

fn main() {
    let pair = parse_pair_file(TEXT).expect("well-formed pair");
    println!("{} elements", pair.len());
    for side in Side::BOTH {
        for block in pair.partition(side).blocks() {
            let members: Vec<&str> = block.members().iter().map(|&u| pair.element(u).as_str()).collect();
            println!("  P{side} {:<5} {{{}}}", block.name(), members.join(", "));
        }
    }

    // Writing and reading back yields the same canonical pair.
    let written = write_pair_file(&pair);
    assert_eq!(parse_pair_file(&written).unwrap(), pair);
    print!("canonical form:\n{written}");

    // Validation reports every problem at once.
    let raw = RawPair {
        universe: vec!["a".into(), "b".into(), "b".into()],
        partitions: [
            vec![("X".into(), vec!["a".into(), "b".into()])],
            vec![("Y".into(), vec!["a".into(), "z".into()])],
        ],
    };
    let err = validate_pair(&raw).unwrap_err();
    println!("{err}");

    match parse_pair_file("element a A\n") {
        Err(PairFileError::Invalid(e)) => println!("{e}"),
        other => panic!("unexpected {other:?}"),
    }
}
