//! Golden reports for the corpus. Set `UPDATE_GOLDEN=1` to rewrite them.

mod common;

use common::{golden_dir, golden_name, run_in_corpus, GOLDEN_COMMANDS};

#[test]
fn golden_reports_match() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for command in GOLDEN_COMMANDS {
        let (_, text) = run_in_corpus(command);
        let path = golden_dir().join(golden_name(command));
        if update {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if expected != text {
            mismatched.push(*command);
        }
    }
    assert!(mismatched.is_empty(), "golden mismatch for {mismatched:?}");
}

#[test]
fn exit_codes_follow_the_contract() {
    let expect = [
        ("verify witt3.alg", 0),
        ("verify witt3_broken.alg", 1),
        ("verify malformed.alg", 2),
        ("verify out_of_range.alg", 2),
        ("verify missing.alg", 2),
        ("frobnicate witt3.alg", 2),
        ("--budget 10 cohomology witt3.alg --levels 3", 3),
        ("extend deform_order1.alg", 0),
        ("extend deform_wrong_order2.alg", 1),
        ("catalog block --max-degree 2 --lambda 1 --q 1", 1),
        ("transport witt3.alg witt3.alg bad_witness.alg", 1),
    ];
    for (command, code) in expect {
        assert_eq!(run_in_corpus(command).0, code, "{command}");
    }
}
