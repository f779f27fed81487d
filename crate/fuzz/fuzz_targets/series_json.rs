#![no_main]

use k4links_core::SeriesReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = SeriesReport::from_json(text) {
        assert_eq!(SeriesReport::from_json(&r.to_json()).expect("own output parses").order, r.order);
    }
});
