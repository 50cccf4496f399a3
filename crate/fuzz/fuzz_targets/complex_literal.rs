#![no_main]

use chvol::hyperbolic::{parse_complex_list, HomogeneousPoint};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(list) = parse_complex_list(text) {
        assert!(list.iter().all(|z| z.re.is_finite() && z.im.is_finite()));
        // The point constructor must reject, not panic.
        let _ = HomogeneousPoint::new(list);
    }
    let _ = text.parse::<HomogeneousPoint>();
});
