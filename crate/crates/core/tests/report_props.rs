use k4links_core::SeriesReport;
use num_bigint::BigInt;
use proptest::prelude::*;

fn bigints() -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(prop::collection::vec(any::<u32>(), 1..4), 1..30).prop_map(|rows| {
        rows.into_iter()
            .map(|limbs| {
                limbs.into_iter().fold(BigInt::from(0), |acc, l| {
                    acc * BigInt::from(u64::from(u32::MAX) + 1) + BigInt::from(l)
                })
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn csv_roundtrip(c in bigints()) {
        let r = SeriesReport::new("S", &c);
        let back = SeriesReport::from_csv("S", &r.to_csv()).unwrap();
        prop_assert_eq!(back.integers().unwrap(), c);
    }

    #[test]
    fn json_roundtrip(c in bigints(), family in "[A-Za-z0-9]{1,8}") {
        let r = SeriesReport::new(&family, &c);
        prop_assert_eq!(SeriesReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn parsers_reject_without_panicking(s in "\\PC{0,80}") {
        let _ = SeriesReport::from_csv("S", &s);
        let _ = SeriesReport::from_json(&s);
    }
}
