#![no_main]

use chvol::volume::{symmetry_order_bound_for, BoundReport};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(report) = serde_json::from_slice::<BoundReport>(data) else {
        return;
    };
    let text = serde_json::to_string(&report).expect("decoded report encodes");
    serde_json::from_str::<BoundReport>(&text).expect("own output decodes");
    let _ = report.log10_c();
    let _ = symmetry_order_bound_for(1.0, &report);
});
