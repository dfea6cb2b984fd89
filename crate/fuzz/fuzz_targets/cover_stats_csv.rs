#![no_main]

use hausmeas::dimension::{dim_bound_direct, dim_bound_last};
use hausmeas::io::parse_cover_stats;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(stats) = parse_cover_stats(data) {
        let _ = dim_bound_last(&stats, None);
        let _ = dim_bound_direct(&stats, None);
    }
});
