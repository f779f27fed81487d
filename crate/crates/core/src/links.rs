//! Generating functions for K4-minor-free links, counted by crossings.
//!
//! Vertex weights are multisets of signed odd twist numbers, edge weights are the
//! even twist classes; trees of these give the prime-factor series and the
//! dissymmetry formula turns rooted trees into unrooted ones.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{CheckError, SeriesError};
use crate::grammar::{solve_fixpoint, GrammarSystem};
use crate::series::TruncSeries;

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `z^2 + 2z^4/(1-z^2)`: one edge class of size 2, two of every even size from 4 on.
pub fn build_e(order: usize) -> TruncSeries {
    let mut c = vec![0i64; order + 1];
    for k in (2..=order).step_by(2) {
        c[k] = if k == 2 { 1 } else { 2 };
    }
    TruncSeries::from_ints(&c, order)
}

/// `2z^3/(1-z^2)`: signed odd twists of size at least 3.
pub fn build_kbar(order: usize) -> TruncSeries {
    let mut c = vec![0i64; order + 1];
    for k in (3..=order).step_by(2) {
        c[k] = 2;
    }
    TruncSeries::from_ints(&c, order)
}

/// Multisets of signed odd twists.
pub fn build_k(order: usize) -> Result<TruncSeries, SeriesError> {
    build_kbar(order).pleth_exp()
}

/// Solves `F = E K Mset(F)` by fixpoint iteration.
pub fn build_f(order: usize) -> Result<TruncSeries, SeriesError> {
    let f = &build_e(order) * &build_k(order)?;
    let sys = GrammarSystem::new(order).unknown("F", move |a| Ok(&f * &a.of("F").pleth_exp()?));
    Ok(solve_fixpoint(&sys)?.of("F").clone())
}

/// Vertex-rooted trees `F/E`.
pub fn build_tpointed(order: usize) -> Result<TruncSeries, SeriesError> {
    build_tpointed_from(&build_f(order + 2)?, &build_e(order + 2))
}

fn build_tpointed_from(f: &TruncSeries, e: &TruncSeries) -> Result<TruncSeries, SeriesError> {
    f.div_shifted(e)
}

/// Unrooted trees: `F/E + E/2 (-(F/E)^2 + F(z^2)/E(z^2))`.
pub fn build_lbar(order: usize) -> Result<TruncSeries, SeriesError> {
    let f = build_f(order + 2)?;
    lbar_from_f(&f, order)
}

/// Same as [`build_lbar`] with `F` supplied (order at least `order + 2`).
pub fn lbar_from_f(f: &TruncSeries, order: usize) -> Result<TruncSeries, SeriesError> {
    let e = build_e(f.order());
    let tp = build_tpointed_from(f, &e)?.truncate(order);
    let e = e.truncate(order);
    let tp2 = tp.power_substitute(2);
    let inner = &tp2 - &(&tp * &tp);
    Ok(&tp + &(&e * &inner).scale(&half()))
}

/// Multisets of prime factors: `Mset(Lbar - 1)`.
pub fn build_lhat(order: usize) -> Result<TruncSeries, SeriesError> {
    lhat_from_lbar(&build_lbar(order)?)
}

pub fn lhat_from_lbar(lbar: &TruncSeries) -> Result<TruncSeries, SeriesError> {
    (lbar - &TruncSeries::one(lbar.order())).pleth_exp()
}

/// Links, by crossings: `Lhat(z^2)/(1-z) - 1`.
pub fn build_l(order: usize) -> Result<TruncSeries, SeriesError> {
    l_from_lhat(&build_lhat(order / 2)?, order)
}

/// `lhat` needs order at least `order / 2`.
pub fn l_from_lhat(lhat: &TruncSeries, order: usize) -> Result<TruncSeries, SeriesError> {
    let mut sq = TruncSeries::zero(order);
    for i in 0..=order / 2 {
        sq.set_coeff(2 * i, lhat.coeff(i).clone());
    }
    let mut out = TruncSeries::zero(order);
    let mut acc = BigRational::from_integer(BigInt::from(0));
    for n in 0..=order {
        acc += sq.coeff(n);
        out.set_coeff(n, acc.clone());
    }
    Ok(&out - &TruncSeries::one(order))
}

/// `prod_{n>=1} (1+z^n)^2`, as integers.
pub fn partition_product(order: usize) -> Vec<BigInt> {
    let mut g = vec![BigInt::from(0); order + 1];
    g[0] = BigInt::one();
    for n in 1..=order {
        for _ in 0..2 {
            for m in (n..=order).rev() {
                let prev = g[m - n].clone();
                g[m] += prev;
            }
        }
    }
    g
}

/// Checks `(1-z)^2 G(z) = K(z)` up to `order`; returns the first mismatch.
pub fn check_partition_identity(order: usize) -> Result<(), CheckError> {
    let g = partition_product(order);
    let k = build_k(order)?.to_integers()?;
    for n in 0..=order {
        let mut lhs = g[n].clone();
        if n >= 1 {
            lhs -= &g[n - 1] * 2;
        }
        if n >= 2 {
            lhs += &g[n - 2];
        }
        if lhs != k[n] {
            return Err(CheckError::Mismatch {
                what: "(1-z)^2 prod(1+z^n)^2 vs K".into(),
                index: n,
                expected: lhs.to_string(),
                actual: k[n].to_string(),
            });
        }
    }
    Ok(())
}

/// All link series at one order, plus the intermediate pieces.
#[derive(Clone, Debug)]
pub struct LinkSeriesBundle {
    pub order: usize,
    pub e: TruncSeries,
    pub kbar: TruncSeries,
    pub k: TruncSeries,
    pub f: TruncSeries,
    pub tpointed: TruncSeries,
    pub lbar: TruncSeries,
    pub lhat: TruncSeries,
    pub l: TruncSeries,
}

impl LinkSeriesBundle {
    pub fn build(order: usize) -> Result<Self, SeriesError> {
        let f = build_f(order + 2)?;
        let e = build_e(order + 2);
        let tpointed = build_tpointed_from(&f, &e)?.truncate(order);
        let lbar = lbar_from_f(&f, order)?;
        let lhat = lhat_from_lbar(&lbar)?;
        let l = l_from_lhat(&lhat, order)?;
        let b = LinkSeriesBundle {
            order,
            e: e.truncate(order),
            kbar: build_kbar(order),
            k: build_k(order)?,
            f: f.truncate(order),
            tpointed,
            lbar,
            lhat,
            l,
        };
        b.validate()?;
        Ok(b)
    }

    /// Counting series must have nonnegative integer coefficients.
    pub fn validate(&self) -> Result<(), SeriesError> {
        for s in [
            &self.k,
            &self.f,
            &self.tpointed,
            &self.lbar,
            &self.lhat,
            &self.l,
        ] {
            s.to_counts()?;
        }
        Ok(())
    }
}
