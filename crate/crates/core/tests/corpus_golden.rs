mod common;

use std::path::PathBuf;

use common::monomial::Monomial;
use extdim_core::corpus::{load_corpus_dir, GoldenValue, Provenance};
use extdim_core::report::{check_entry, ReportOptions};

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn every_corpus_entry_matches_its_golden_block() {
    let entries = load_corpus_dir(&corpus_dir()).unwrap();
    assert!(entries.len() >= 9);
    for e in &entries {
        let out = check_entry(e, &ReportOptions::default()).unwrap();
        assert!(out.passed(), "{}: {:?}", e.name, out.mismatches);
        assert_eq!(out.report.annotations, e.notes);
    }
}

fn opt_list(xs: &[Option<usize>]) -> GoldenValue {
    GoldenValue::List(xs.iter().map(|x| x.map(|v| v as i64)).collect())
}

#[test]
fn monomial_oracle_backs_its_frozen_values() {
    let mut seen = 0;
    for e in load_corpus_dir(&corpus_dir()).unwrap() {
        let Some(m) = Monomial::from_text(&e.source) else { continue };
        for g in &e.golden {
            let expect = match g.key.as_str() {
                "dimension" => GoldenValue::Int(m.dimension() as i64),
                "loewy_length" => GoldenValue::Int(m.loewy_length() as i64),
                "global_dimension" => m.global_dimension().map_or(GoldenValue::Infinite, |d| GoldenValue::Int(d as i64)),
                "pd_simple" => opt_list(&m.pd_simples()),
                _ => continue,
            };
            if g.provenance == Provenance::Oracle("monomial".into()) || g.provenance == Provenance::Cited {
                assert_eq!(g.value, expect, "{} line {}", e.name, g.line);
                seen += 1;
            }
        }
    }
    assert!(seen >= 20);
}
