//! Replays the checked-in fuzz seeds through the decoders.

use std::fs;
use std::path::PathBuf;

use chvol::hyperbolic::{parse_complex_list, HomogeneousPoint};
use chvol::volume::BoundReport;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn complex_literal_seeds_parse() {
    for (name, text) in seeds("complex_literal") {
        let list = parse_complex_list(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(list.iter().all(|z| z.re.is_finite() && z.im.is_finite()), "{name}");
    }
}

#[test]
fn point_json_seeds_round_trip() {
    for (name, text) in seeds("point_json") {
        let p = HomogeneousPoint::from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(HomogeneousPoint::from_json(&p.to_json()).unwrap(), p, "{name}");
    }
}

#[test]
fn bound_report_seeds_round_trip() {
    for (name, text) in seeds("bound_report_json") {
        let r: BoundReport = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let again: BoundReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(again.n, r.n, "{name}");
        assert_eq!(again.c, r.c, "{name}");
    }
}
