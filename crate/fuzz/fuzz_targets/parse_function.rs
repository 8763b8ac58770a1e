#![no_main]

use bassline::fixtures;
use bassline::format::{function_to_json, parse_function_with_role};
use bassline::validate_bass;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for poset in [fixtures::chain3(), fixtures::vee()] {
        if let Ok((f, role)) = parse_function_with_role(&poset, text) {
            let (again, _) = parse_function_with_role(&poset, &function_to_json(&f, role)).unwrap();
            assert_eq!(again, f);
            let _ = validate_bass(&f);
        }
    }
});
