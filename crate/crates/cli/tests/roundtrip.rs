//! Algebra files survive parse and emit, and the library entry point
//! matches the binary.

mod common;

use lietriple_cli::app::run;
use lietriple_cli::format::{emit, parse};

const CANONICAL: &[&str] = &["witt3.alg", "witt2_half.alg", "block_q0.alg", "block_q1_printed.alg", "block_q1_lie.alg", "random7.alg"];

#[test]
fn catalog_files_are_canonical() {
    for name in CANONICAL {
        let text = std::fs::read_to_string(common::corpus_dir().join(name)).unwrap();
        assert_eq!(emit(&parse(&text).unwrap()), text, "{name}");
    }
}

#[test]
fn every_valid_corpus_file_reparses_to_the_same_value() {
    for entry in std::fs::read_dir(common::corpus_dir()).unwrap() {
        let path = entry.unwrap().path();
        let Ok(file) = parse(&std::fs::read_to_string(&path).unwrap()) else {
            continue;
        };
        assert_eq!(parse(&emit(&file)).unwrap(), file, "{}", path.display());
    }
}

#[test]
fn malformed_input_reports_a_location() {
    let text = std::fs::read_to_string(common::corpus_dir().join("malformed.alg")).unwrap();
    let err = parse(&text).unwrap_err();
    assert!(err.line > 0);
}

#[test]
fn catalog_output_matches_the_corpus() {
    let out = run(["catalog", "witt", "--max-degree", "3", "--lambda", "1"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, std::fs::read_to_string(common::corpus_dir().join("witt3.alg")).unwrap());
}

#[test]
fn in_process_run_matches_the_binary() {
    let path = common::corpus_dir().join("witt3.alg");
    let path = path.to_str().unwrap();
    let first = run(["verify", path]);
    let second = run(["verify", path]);
    assert_eq!(first, second);
    let (code, text) = common::run_in_corpus(&format!("verify {path}"));
    assert_eq!(code, first.code);
    assert!(text.contains(&first.stdout));
}
