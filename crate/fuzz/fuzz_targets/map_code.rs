#![no_main]

use k4links_oracle::RotationMap;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = RotationMap::decode(text) {
        assert_eq!(RotationMap::decode(&m.encode()).unwrap(), m);
        let _ = m.genus();
        if m.is_planar() && m.has_crossings() {
            let _ = k4links_oracle::factorize(&m);
        }
    }
});
