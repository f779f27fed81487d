#![no_main]

use k4links_core::SeriesReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = SeriesReport::from_csv("F", text) {
        let again = SeriesReport::from_csv("F", &r.to_csv()).expect("own output parses");
        assert_eq!(again.integers().unwrap(), r.integers().unwrap());
    }
});
