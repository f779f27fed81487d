//! Euler's Gamma function at working precision.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::real::Real;

/// `B_0 .. B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc +=
                    BigRational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(k))) * bk;
            }
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `ln Gamma(x)` for `x` large enough that Stirling's series reaches full precision.
fn ln_gamma_large(x: &Real, terms: usize, bern: &[BigRational]) -> Real {
    let p = x.prec();
    let half = Real::one(p) / Real::from_i64(2, p);
    let two_pi = Real::pi(p) * Real::from_i64(2, p);
    let mut s = (x - &half) * x.ln() - x + two_pi.ln() * &half;
    let x2 = x * x;
    let mut xp = x.clone();
    for k in 1..=terms {
        let c = Real::from_ratio(&bern[2 * k], p) / Real::from_i64((2 * k * (2 * k - 1)) as i64, p);
        s = s + c / &xp;
        xp = &xp * &x2;
    }
    s
}

/// `Gamma(x)` for real `x` not a non-positive integer.
pub fn gamma(x: &Real) -> Real {
    let p = x.prec();
    let shift_to = Real::from_i64((p / 2).max(30) as i64, p);
    let mut y = x.clone();
    let mut denom = Real::one(p);
    while y < shift_to {
        denom = denom * &y;
        y = y + Real::one(p);
    }
    // the k-th Stirling term is about 2 (2k)! / (2 pi y)^(2k)
    let terms = 12 + p / 8;
    let bern = bernoulli(2 * terms);
    ln_gamma_large(&y, terms, &bern).exp() / denom
}
