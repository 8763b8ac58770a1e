//! Replays the fuzz seeds through the same round trips the fuzz targets check.

use std::fs;
use std::path::PathBuf;

use bassline::fixtures;
use bassline::format::{
    function_to_json, parse_function_with_role, parse_poset, parse_sequence, poset_to_json,
    sequence_to_json,
};
use bassline::sequence::{fct_from_seq, seq_from_fct};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut paths: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds in {}", dir.display());
    paths.iter().map(|p| fs::read_to_string(p).unwrap()).collect()
}

#[test]
fn poset_seeds() {
    let mut parsed = 0;
    for text in seeds("parse_poset") {
        if let Ok(poset) = parse_poset(&text) {
            assert_eq!(parse_poset(&poset_to_json(&poset)).unwrap(), poset);
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn function_seeds() {
    let mut parsed = 0;
    for text in seeds("parse_function") {
        for poset in [fixtures::chain3(), fixtures::vee()] {
            if let Ok((f, role)) = parse_function_with_role(&poset, &text) {
                let (again, _) = parse_function_with_role(&poset, &function_to_json(&f, role)).unwrap();
                assert_eq!(again, f);
                parsed += 1;
            }
        }
    }
    assert!(parsed > 0);
}

#[test]
fn sequence_seeds() {
    let poset = fixtures::vee();
    let mut valid = 0;
    for text in seeds("parse_sequence") {
        let s = parse_sequence(&poset, &text).unwrap();
        assert_eq!(parse_sequence(&poset, &sequence_to_json(&s)).unwrap(), s);
        if let Ok(f) = fct_from_seq(&s) {
            assert_eq!(seq_from_fct(&f), s);
            valid += 1;
        }
    }
    assert!(valid > 0);
}
