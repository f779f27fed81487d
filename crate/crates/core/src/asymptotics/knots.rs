//! `K(z) = (1-z)^2 prod (1+z^n)^2` grows like `c n^(-7/4) exp(beta sqrt(n))`.

use num_bigint::BigInt;

use crate::links::partition_product;
use crate::real::Real;

use super::Precision;

#[derive(Clone, Debug)]
pub struct KnotAsymptotics {
    /// `pi^2 / 4 * 6^(-5/4)`
    pub c: Real,
    /// `sqrt(2 pi^2 / 3)`
    pub beta: Real,
    /// Polynomial exponent, `-7/4`.
    pub exponent: Real,
}

pub fn knot_asymptotics(prec: Precision) -> KnotAsymptotics {
    let p = prec.bits();
    let pi2 = Real::pi(p) * Real::pi(p);
    let six = Real::from_i64(6, p);
    let c =
        &pi2 / &Real::from_i64(4, p) * six.powf(&(Real::from_i64(-5, p) / Real::from_i64(4, p)));
    let beta = (&pi2 * &Real::from_i64(2, p) / Real::from_i64(3, p)).sqrt();
    KnotAsymptotics {
        c,
        beta,
        exponent: Real::from_i64(-7, p) / Real::from_i64(4, p),
    }
}

/// Exact `[z^n] K` via the partition product.
pub fn knot_coefficients(order: usize) -> Vec<BigInt> {
    let g = partition_product(order);
    (0..=order)
        .map(|n| {
            let mut v = g[n].clone();
            if n >= 1 {
                v -= &g[n - 1] * 2;
            }
            if n >= 2 {
                v += &g[n - 2];
            }
            v
        })
        .collect()
}

/// `[z^n]K / (c n^(-7/4) e^(beta sqrt n))` for each requested `n`.
pub fn knot_ratio(ns: &[usize], prec: Precision) -> Vec<(usize, Real)> {
    let a = knot_asymptotics(prec);
    let p = prec.bits();
    let top = ns.iter().copied().max().unwrap_or(0);
    let k = knot_coefficients(top);
    ns.iter()
        .map(|&n| {
            let nn = Real::from_i64(n as i64, p);
            let pred = &a.c * &nn.powf(&a.exponent) * (&a.beta * &nn.sqrt()).exp();
            (n, Real::from_bigint(&k[n], p) / pred)
        })
        .collect()
}
