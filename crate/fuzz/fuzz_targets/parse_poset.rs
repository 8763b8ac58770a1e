#![no_main]

use bassline::format::{parse_poset, poset_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(poset) = parse_poset(text) {
        let again = parse_poset(&poset_to_json(&poset)).expect("printed poset parses");
        assert_eq!(again, poset);
        let _ = poset.structure_report();
    }
});
