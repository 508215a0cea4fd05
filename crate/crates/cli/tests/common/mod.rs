//! Shared helpers: the golden corpus and a runner for the built binary.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// Every command in the golden corpus, run from `tests/corpus`.
pub const GOLDEN_COMMANDS: &[&str] = &[
    "verify witt3.alg",
    "verify witt2_half.alg",
    "verify block_q0.alg",
    "verify block_q1_printed.alg",
    "verify block_q1_lie.alg",
    "verify random7.alg",
    "verify witt3_broken.alg",
    "verify malformed.alg",
    "verify out_of_range.alg",
    "verify missing.alg",
    "cohomology pair_abelian.alg --levels 1,3",
    "--output json cohomology pair_abelian.alg --levels 1,3",
    "cohomology witt3.alg --levels 0,1,2 --complex reynolds",
    "--budget 10 cohomology witt3.alg --levels 3",
    "reynolds-check witt3.alg",
    "reynolds-check witt3_broken.alg",
    "mc witt3.alg",
    "--output json mc random7.alg",
    "twisted-mc twisted_zero.alg",
    "twisted-mc twisted_p.alg",
    "obstruction deform_trivial.alg",
    "obstruction deform_order1.alg",
    "extend deform_order1.alg",
    "extend deform_wrong_order2.alg",
    "induce lts witt3.alg",
    "induce ns witt3.alg",
    "induce rep random7.alg",
    "catalog witt --max-degree 3 --lambda 1",
    "catalog witt --max-degree 2 --lambda -2",
    "catalog block --max-degree 2 --lambda 1 --q 0",
    "catalog block --max-degree 2 --lambda 1 --q 1",
    "--output json catalog block --max-degree 1 --lambda 1 --q -2 --variant lie-derived",
    "--seed 7 catalog random",
    "transport witt3.alg witt3.alg grading_witness.alg --level 2",
    "transport witt3.alg witt3.alg bad_witness.alg",
    "equivalence deform_coboundary.alg deform_trivial.alg",
    "equivalence deform_order1.alg deform_trivial.alg",
    "cohomology witt3.alg --levels 2",
    "frobnicate witt3.alg",
];

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("corpus")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Exit code, stdout and stderr of one invocation, as one byte string.
pub fn run_in_corpus(command: &str) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lietriple"))
        .args(command.split_whitespace())
        .current_dir(corpus_dir())
        .env_remove("LIETRIPLE_BUDGET")
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let text = format!(
        "exit: {code}\n--- stdout\n{}--- stderr\n{}",
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8")
    );
    (code, text)
}

pub fn golden_name(command: &str) -> String {
    let slug: String = command.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    format!("{slug}.out")
}
