#![no_main]

use libfuzzer_sys::fuzz_target;
use ultraheun_core::poly::Poly;
use ultraheun_core::scalar::{parse_rat, Rat};

fuzz_target!(|data: &[u8]| {
    // Polynomials travel as JSON arrays of rational strings (ascending
    // exponent). Decoding arbitrary bytes must never panic, and decoded
    // values must survive an encode/decode cycle unchanged.
    let Ok(strings) = serde_json::from_slice::<Vec<String>>(data) else {
        return;
    };
    let mut coeffs: Vec<Rat> = Vec::with_capacity(strings.len());
    for s in &strings {
        match parse_rat(s) {
            Ok(r) => coeffs.push(r),
            Err(_) => return,
        }
    }
    let poly = Poly::from_coeffs(coeffs);
    let wire: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    let reparsed: Vec<Rat> = wire.iter().map(|s| parse_rat(s).unwrap()).collect();
    assert_eq!(Poly::from_coeffs(reparsed), poly);
});
