use k4links_core::TruncSeries;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const ORDER: usize = 10;

fn series(lo: i64, hi: i64) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(lo..=hi, ORDER + 1).prop_map(|c| TruncSeries::from_ints(&c, ORDER))
}

fn unit() -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(-5i64..=5, ORDER).prop_map(|mut c| {
        c.insert(0, 1);
        TruncSeries::from_ints(&c, ORDER)
    })
}

// multisets by the product of (1 - z^k)^(-a_k), expanded one factor at a time
fn multiset_product(a: &[i64]) -> TruncSeries {
    let mut acc = TruncSeries::one(ORDER);
    for (k, &ak) in a.iter().enumerate().skip(1) {
        let mut base = vec![0i64; ORDER + 1];
        base[0] = 1;
        base[k] = -1;
        let f = TruncSeries::from_ints(&base, ORDER);
        for _ in 0..ak {
            acc = acc.div(&f).unwrap();
        }
    }
    acc
}

proptest! {
    #[test]
    fn ring_axioms(a in series(-9, 9), b in series(-9, 9), c in series(-9, 9)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &TruncSeries::one(ORDER), a);
    }

    #[test]
    fn division_inverts_multiplication(a in series(-9, 9), u in unit()) {
        prop_assert_eq!((&a * &u).div(&u).unwrap(), a);
    }

    #[test]
    fn pleth_exp_counts_multisets(mut a in prop::collection::vec(0i64..=3, ORDER + 1)) {
        a[0] = 0;
        let s = TruncSeries::from_ints(&a, ORDER);
        prop_assert_eq!(s.pleth_exp().unwrap(), multiset_product(&a));
    }

    #[test]
    fn pleth_exp_is_multiplicative(mut a in prop::collection::vec(-3i64..=3, ORDER + 1), mut b in prop::collection::vec(-3i64..=3, ORDER + 1)) {
        a[0] = 0;
        b[0] = 0;
        let (a, b) = (TruncSeries::from_ints(&a, ORDER), TruncSeries::from_ints(&b, ORDER));
        prop_assert_eq!((&a + &b).pleth_exp().unwrap(), &a.pleth_exp().unwrap() * &b.pleth_exp().unwrap());
    }

    #[test]
    fn substitution_agrees_with_composition(a in series(-9, 9), k in 1usize..4) {
        let mut zk = TruncSeries::zero(ORDER);
        zk.set_coeff(k, BigRational::from_integer(BigInt::from(1)));
        prop_assert_eq!(TruncSeries::compose(&a, &zk).unwrap(), a.power_substitute(k));
    }

    #[test]
    fn exp_turns_sums_into_products(mut a in prop::collection::vec(-4i64..=4, ORDER + 1), mut b in prop::collection::vec(-4i64..=4, ORDER + 1)) {
        a[0] = 0;
        b[0] = 0;
        let (a, b) = (TruncSeries::from_ints(&a, ORDER), TruncSeries::from_ints(&b, ORDER));
        prop_assert_eq!((&a + &b).exp().unwrap(), &a.exp().unwrap() * &b.exp().unwrap());
    }
}

#[test]
fn truncation_follows_the_smaller_order() {
    let a = TruncSeries::from_ints(&[1, 1, 1, 1], 3);
    let b = TruncSeries::from_ints(&[1, 1], 1);
    assert_eq!((&a * &b).order(), 1);
    assert_eq!((&a + &b).order(), 1);
}
