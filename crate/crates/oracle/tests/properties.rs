use k4links_oracle::enumerate::rooted_maps;
use k4links_oracle::graph::is_k4_minor_free;
use k4links_oracle::{factorize, symmetry_report, RotationMap};
use proptest::prelude::*;

fn k4_free(v: usize) -> Vec<RotationMap> {
    rooted_maps(v)
        .into_iter()
        .filter(is_k4_minor_free)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factors_do_not_depend_on_the_root(v in 1usize..=5, pick in any::<prop::sample::Index>(), bits in any::<u32>(), root in any::<prop::sample::Index>()) {
        let maps = k4_free(v);
        let m = &maps[pick.index(maps.len())];
        let bits: Vec<bool> = (0..v).map(|k| bits >> k & 1 == 1).collect();
        let d = m.clone().with_crossings(&bits).unwrap();
        let r = d.reroot(root.index(d.darts()));
        let (a, b) = (factorize(&d).unwrap(), factorize(&r).unwrap());
        let abs = |f: &k4links_oracle::TorusFactorization| {
            let mut q: Vec<(u64, usize)> = f.factors.iter().map(|q| q.unsigned_abs()).zip(f.lengths.iter().copied()).collect();
            q.sort();
            q
        };
        prop_assert_eq!(abs(&a), abs(&b));
        prop_assert_eq!(a.loop_count, b.loop_count);
        prop_assert_eq!(a.components, b.components);
        prop_assert_eq!(a.is_minimal(), b.is_minimal());
        prop_assert_eq!(a.is_unknot(), b.is_unknot());
    }

    #[test]
    fn code_roundtrip(v in 1usize..=4, pick in any::<prop::sample::Index>(), bits in any::<u32>()) {
        let maps = rooted_maps(v);
        let m = &maps[pick.index(maps.len())];
        let bits: Vec<bool> = (0..v).map(|k| bits >> k & 1 == 1).collect();
        let d = m.clone().with_crossings(&bits).unwrap();
        prop_assert_eq!(RotationMap::decode(&d.encode()).unwrap(), d);
    }

    #[test]
    fn decode_never_panics(s in "[0-9,;]{0,40}") {
        let _ = RotationMap::decode(&s);
    }

    #[test]
    fn minimal_diagrams_use_every_crossing(v in 1usize..=5, pick in any::<prop::sample::Index>(), bits in any::<u32>()) {
        let maps = k4_free(v);
        let m = &maps[pick.index(maps.len())];
        let bits: Vec<bool> = (0..v).map(|k| bits >> k & 1 == 1).collect();
        let f = factorize(&m.clone().with_crossings(&bits).unwrap()).unwrap();
        if f.is_minimal() {
            prop_assert_eq!(f.factors.iter().map(|q| q.unsigned_abs() as usize).sum::<usize>(), v);
        }
    }
}

#[test]
fn rerooting_a_map_stays_in_its_class() {
    for m in rooted_maps(3) {
        let min = (0..m.darts()).map(|r| m.canonical_code(r)).min().unwrap();
        let r = m.reroot(5);
        let min_r = (0..r.darts()).map(|x| r.canonical_code(x)).min().unwrap();
        assert_eq!(min, min_r);
    }
}

#[test]
fn symmetry_is_reported() {
    for v in 3..=5 {
        let s = symmetry_report(v);
        println!(
            "v = {v}: {} of {} unrooted maps have a nontrivial automorphism ({:.3})",
            s.symmetric,
            s.unrooted,
            s.fraction()
        );
        assert!(s.unrooted > 0 && s.symmetric <= s.unrooted);
    }
}
