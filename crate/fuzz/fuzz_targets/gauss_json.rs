#![no_main]

use libfuzzer_sys::fuzz_target;
use serde::Deserialize;
use ultraheun_core::scalar::{parse_rat, GaussRat};

#[derive(Deserialize)]
struct Wire {
    re: String,
    im: String,
}

fuzz_target!(|data: &[u8]| {
    // Gaussian rationals travel as {"re": "p/q", "im": "p/q"} objects.
    let Ok(wire) = serde_json::from_slice::<Wire>(data) else {
        return;
    };
    let (Ok(re), Ok(im)) = (parse_rat(&wire.re), parse_rat(&wire.im)) else {
        return;
    };
    let g = GaussRat::new(re, im);
    let back = GaussRat::new(
        parse_rat(&g.re.to_string()).unwrap(),
        parse_rat(&g.im.to_string()).unwrap(),
    );
    assert_eq!(g, back);
});
