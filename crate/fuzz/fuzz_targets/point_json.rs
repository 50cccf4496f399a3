#![no_main]

use chvol::hyperbolic::{bergman_distance, HomogeneousPoint};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = HomogeneousPoint::from_json(text) else {
        return;
    };
    let again = HomogeneousPoint::from_json(&p.to_json()).expect("own output parses");
    assert_eq!(again.n(), p.n());
    if p.is_negative() {
        let _ = bergman_distance(&p, &HomogeneousPoint::center(p.n()));
    }
});
