mod common;

use std::path::PathBuf;

use common::props::{run_suite, SUITE_SEEDS};
use extdim_core::corpus::load_corpus_dir;

fn entries() -> Vec<extdim_core::CorpusEntry> {
    load_corpus_dir(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")).unwrap()
}

#[test]
fn invariants_hold_on_random_modules() {
    let failures = run_suite(&entries(), 24, &SUITE_SEEDS[..2]);
    assert!(failures.is_empty(), "{failures:#?}");
}
