#![no_main]

use hausmeas::bloch_floquet::{build_fiber, eigenvalues};
use hausmeas::io::parse_potential;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(v) = parse_potential(text) else {
        return;
    };
    // Big cells parse fine but make each iteration slow.
    if v.cell_size() > 64 {
        return;
    }
    let phase = vec![0.25; v.dim()];
    if let Ok(h) = build_fiber(&v, &phase) {
        let _ = eigenvalues(&h);
    }
});
