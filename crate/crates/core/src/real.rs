//! Binary floating point with a chosen number of mantissa bits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_base::{Abs, SquareRoot};
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_rational::BigRational;

type F = FBig<HalfEven, 2>;

/// Bits needed for `digits` significant decimal digits plus a guard margin.
pub fn bits_for_digits(digits: usize) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32
}

#[derive(Clone, PartialEq)]
pub struct Real(F);

fn to_ibig(v: &BigInt) -> IBig {
    v.to_string().parse().expect("decimal integer")
}

impl Real {
    pub fn from_i64(v: i64, prec: usize) -> Real {
        Real(F::from(v).with_precision(prec).value())
    }

    pub fn zero(prec: usize) -> Real {
        Real::from_i64(0, prec)
    }

    pub fn one(prec: usize) -> Real {
        Real::from_i64(1, prec)
    }

    pub fn from_bigint(v: &BigInt, prec: usize) -> Real {
        Real(F::from(to_ibig(v)).with_precision(prec).value())
    }

    pub fn from_ratio(v: &BigRational, prec: usize) -> Real {
        Real::from_bigint(v.numer(), prec) / Real::from_bigint(v.denom(), prec)
    }

    /// Exact value of an `f64`, then carried at `prec` bits.
    pub fn from_f64(v: f64, prec: usize) -> Real {
        Real(
            F::try_from(v)
                .expect("finite f64")
                .with_precision(prec)
                .value(),
        )
    }

    /// Parses a plain decimal like `-3.04531`.
    pub fn parse_decimal(s: &str, prec: usize) -> Option<Real> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, s),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() && frac.is_empty() {
            return None;
        }
        if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{}{}", int, frac).parse().ok()?;
        let den = BigInt::from(10).pow(frac.len() as u32);
        let v = Real::from_ratio(&BigRational::new(digits, den), prec);
        Some(if neg { -v } else { v })
    }

    pub fn pi(prec: usize) -> Real {
        Real(F::pi(prec))
    }

    pub fn prec(&self) -> usize {
        self.0.precision()
    }

    pub fn with_prec(&self, prec: usize) -> Real {
        Real(self.0.clone().with_precision(prec).value())
    }

    // exact results (e.g. exp(0)) come back with unlimited precision
    fn same_prec(&self, v: F) -> Real {
        let p = self.prec();
        if v.precision() == p {
            Real(v)
        } else {
            Real(v.with_precision(p).value())
        }
    }

    /// A constant at the same precision as `self`.
    pub fn lift(&self, v: i64) -> Real {
        Real::from_i64(v, self.prec())
    }

    pub fn sqrt(&self) -> Real {
        self.same_prec(self.0.sqrt())
    }

    pub fn exp(&self) -> Real {
        self.same_prec(self.0.exp())
    }

    pub fn ln(&self) -> Real {
        self.same_prec(self.0.ln())
    }

    pub fn abs(&self) -> Real {
        self.same_prec(self.0.clone().abs())
    }

    pub fn recip(&self) -> Real {
        self.lift(1) / self
    }

    pub fn powi(&self, n: i64) -> Real {
        self.same_prec(self.0.powi(n.into()))
    }

    /// `self^e` for real `e`; needs `self > 0`.
    pub fn powf(&self, e: &Real) -> Real {
        (self.ln() * e).exp()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == F::ZERO
    }

    pub fn is_negative(&self) -> bool {
        self.0 < F::ZERO
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// Decimal with `digits` significant digits, plain notation.
    pub fn to_decimal(&self, digits: usize) -> String {
        self.0
            .to_decimal()
            .value()
            .with_precision(digits)
            .value()
            .to_string()
    }

    pub fn max(self, other: Real) -> Real {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(30))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f.precision().unwrap_or(20);
        write!(f, "{}", self.to_decimal(d))
    }
}

macro_rules! real_op {
    ($tr:ident, $m:ident) => {
        impl<'a> $tr<&'a Real> for &'a Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                Real((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                Real(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                Real(self.0.$m(&rhs.0))
            }
        }
        impl<'a> $tr<Real> for &'a Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                Real((&self.0).$m(rhs.0))
            }
        }
    };
}
real_op!(Add, add);
real_op!(Sub, sub);
real_op!(Mul, mul);
real_op!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirds_keep_precision() {
        let p = bits_for_digits(50);
        let x = Real::from_i64(1, p) / Real::from_i64(3, p);
        let back = &x * &x.lift(3);
        assert!((back - x.lift(1)).abs() < Real::from_f64(1e-60, p));
    }

    #[test]
    fn exact_results_keep_precision() {
        let p = bits_for_digits(30);
        assert_eq!(Real::zero(p).exp().prec(), p);
        assert_eq!(Real::one(p).ln().prec(), p);
        assert_eq!(Real::zero(p).prec(), p);
    }

    #[test]
    fn parse_and_print() {
        let p = bits_for_digits(40);
        let v = Real::parse_decimal("-3.04531", p).unwrap();
        assert_eq!(v.to_decimal(6), "-3.04531");
        assert!(Real::parse_decimal("3.x", p).is_none());
        assert!(Real::parse_decimal("", p).is_none());
    }

    #[test]
    fn pi_digits() {
        let p = bits_for_digits(45);
        assert_eq!(
            Real::pi(p).to_decimal(40),
            "3.141592653589793238462643383279502884197"
        );
    }

    #[test]
    fn ratio_conversion() {
        let p = bits_for_digits(30);
        let r = BigRational::new(BigInt::from(-7), BigInt::from(8));
        assert_eq!(Real::from_ratio(&r, p).to_f64(), -0.875);
    }
}
