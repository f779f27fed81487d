use k4links_core::links::{
    build_k, build_l, build_lbar, build_lhat, build_tpointed, check_partition_identity,
    LinkSeriesBundle,
};
use k4links_core::maps::{check_elimination, plus_counts, solve, MapFamily};
use k4links_core::TruncSeries;
use num_bigint::BigInt;

fn ints(s: &TruncSeries) -> Vec<i64> {
    s.to_integers()
        .unwrap()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect()
}

#[test]
fn knot_series() {
    assert_eq!(
        ints(&build_k(15).unwrap()),
        vec![1, 0, 0, 2, 0, 2, 3, 2, 4, 6, 7, 8, 13, 14, 19, 26]
    );
}

#[test]
fn link_series() {
    assert_eq!(
        ints(&build_lbar(12).unwrap()),
        vec![1, 0, 1, 2, 3, 4, 9, 12, 26, 40, 82, 136, 280]
    );
    assert_eq!(
        ints(&build_lhat(12).unwrap()),
        vec![1, 0, 1, 2, 4, 6, 16, 24, 56, 98, 208, 382, 805]
    );
    assert_eq!(
        ints(&build_l(13).unwrap()),
        vec![0, 1, 1, 1, 2, 2, 4, 4, 8, 8, 14, 14, 30, 30]
    );
}

#[test]
fn pointed_trees() {
    // vertex-rooted labelled trees, counted by brute force
    assert_eq!(
        ints(&build_tpointed(12).unwrap()),
        vec![1, 0, 1, 2, 4, 6, 15, 24, 56, 98, 221, 408, 908]
    );
}

#[test]
fn bundle_is_consistent() {
    let b = LinkSeriesBundle::build(40).unwrap();
    b.validate().unwrap();
}

#[test]
fn diagram_series() {
    let cases: [(MapFamily, usize, &[i64]); 3] = [
        (
            MapFamily::All,
            13,
            &[4, 36, 432, 5984, 90112, 1432576, 23656960],
        ),
        (
            MapFamily::Minimal,
            19,
            &[0, 2, 4, 20, 84, 372, 1796, 8516, 42340, 211332],
        ),
        (
            MapFamily::Unknot,
            15,
            &[4, 32, 332, 3968, 51688, 712416, 10214604, 150776064],
        ),
    ];
    for (f, order, even) in cases {
        let plus = plus_counts(&solve(f, order).unwrap()).unwrap();
        let expect: Vec<BigInt> = (0..plus.len())
            .map(|n| {
                if n % 2 == 0 && n > 0 {
                    BigInt::from(even[n / 2 - 1])
                } else {
                    BigInt::from(0)
                }
            })
            .collect();
        assert_eq!(plus, expect, "{f}");
    }
}

#[test]
fn elimination_to_order_64() {
    for f in MapFamily::ALL {
        check_elimination(&solve(f, 64).unwrap()).unwrap();
    }
}

#[test]
fn partition_identity() {
    check_partition_identity(200).unwrap();
}
