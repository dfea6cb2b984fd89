#![no_main]

use hausmeas::compact_sets::{fatten, hausdorff_distance};
use hausmeas::io::parse_compact_set;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(set) = parse_compact_set(text) else {
        return;
    };
    assert_eq!(hausdorff_distance(&set, &set), 0.0);
    if let Ok(fat) = fatten(&set, 0.5) {
        assert!(fat.lebesgue() >= set.to_interval_set().lebesgue());
    }
});
