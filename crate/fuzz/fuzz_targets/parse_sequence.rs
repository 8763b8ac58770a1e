#![no_main]

use bassline::fixtures;
use bassline::format::{parse_sequence, sequence_to_json};
use bassline::sequence::{fct_from_seq, seq_from_fct};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let poset = fixtures::vee();
    if let Ok(s) = parse_sequence(&poset, text) {
        assert_eq!(parse_sequence(&poset, &sequence_to_json(&s)).unwrap(), s);
        if let Ok(f) = fct_from_seq(&s) {
            assert_eq!(seq_from_fct(&f), s);
        }
    }
});
