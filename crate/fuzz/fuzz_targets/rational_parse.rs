#![no_main]

use libfuzzer_sys::fuzz_target;
use ultraheun_core::scalar::parse_rat;

fuzz_target!(|data: &[u8]| {
    // The rational parser is the CLI's input surface; it must never panic,
    // and any accepted value must round-trip through its display form.
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(r) = parse_rat(text) {
            let shown = r.to_string();
            let again = parse_rat(&shown).expect("canonical form re-parses");
            assert_eq!(r, again);
        }
    }
});
