#![no_main]

use hausmeas_cli::config::parse_measure_config;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_measure_config(text);
    }
});
