//! Exact truncated power series over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::SeriesError;

/// A power series `sum c_n z^n` known exactly for `n <= order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn is_integral(c: &[BigRational]) -> bool {
    c.iter().all(|x| x.denom().is_one())
}

// Truncated Cauchy product; integral inputs take a BigInt fast path.
fn convolve(a: &[BigRational], b: &[BigRational], order: usize) -> Vec<BigRational> {
    let len = order + 1;
    if is_integral(a) && is_integral(b) {
        let ai: Vec<&BigInt> = a.iter().map(|x| x.numer()).collect();
        let bi: Vec<&BigInt> = b.iter().map(|x| x.numer()).collect();
        let anz: Vec<usize> = (0..ai.len().min(len))
            .filter(|&i| !ai[i].is_zero())
            .collect();
        let mut out = vec![BigInt::zero(); len];
        for &i in &anz {
            for j in 0..(len - i).min(bi.len()) {
                if !bi[j].is_zero() {
                    out[i + j] += ai[i] * bi[j];
                }
            }
        }
        return out.into_iter().map(BigRational::from_integer).collect();
    }
    let mut out = vec![BigRational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// The series `z`.
    pub fn var(order: usize) -> Self {
        Self::monomial(BigRational::one(), 1, order)
    }

    /// `c z^k`, or zero when `k > order`.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from coefficients; missing ones are zero, extra ones are dropped.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| q(c)).collect(), order)
    }

    pub fn from_bigints(coeffs: &[BigInt], order: usize) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^n`; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: BigRational) {
        self.coeffs[n] = c;
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&q(c))
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Quotient `self / other`; `other` needs an invertible constant term.
    pub fn div(&self, other: &TruncSeries) -> Result<Self, SeriesError> {
        let n = self.order().min(other.order());
        let b0 = other.coeffs[0].clone();
        if b0.is_zero() {
            return Err(SeriesError::NonInvertible);
        }
        let inv = b0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let bj = &other.coeffs[j];
                if !bj.is_zero() {
                    acc -= bj * &out[k - j];
                }
            }
            out.push(acc * &inv);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Division where both sides may share a power of `z`, e.g. `F/E` with both of valuation 2.
    /// The result order drops by the common valuation.
    pub fn div_shifted(&self, other: &TruncSeries) -> Result<Self, SeriesError> {
        let v = other.valuation().ok_or(SeriesError::NonInvertible)?;
        if let Some(w) = self.valuation() {
            if w < v {
                return Err(SeriesError::NonInvertible);
            }
        }
        let n = self.order().min(other.order());
        let a = TruncSeries::from_coeffs(self.coeffs[v.min(n + 1)..].to_vec(), n - v);
        let b = TruncSeries::from_coeffs(other.coeffs[v..].to_vec(), n - v);
        a.div(&b)
    }

    /// `outer(inner)`; `inner` must have zero constant term.
    pub fn compose(outer: &TruncSeries, inner: &TruncSeries) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = outer.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = TruncSeries::zero(n);
        for k in (0..=n).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &outer.coeffs[k];
        }
        Ok(acc)
    }

    /// `exp(self)`; needs a zero constant term so the result stays rational.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = self.order();
        // n e_n = sum_{k=1}^n k a_k e_{n-k}
        let ka: Vec<BigRational> = (0..=n).map(|k| &self.coeffs[k] * q(k as i64)).collect();
        let mut e = vec![BigRational::one()];
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !ka[k].is_zero() {
                    acc += &ka[k] * &e[m - k];
                }
            }
            e.push(acc / q(m as i64));
        }
        Ok(TruncSeries { coeffs: e })
    }

    /// `self(z^k)` truncated at the same order.
    pub fn power_substitute(&self, k: usize) -> Self {
        assert!(k >= 1, "power substitution needs k >= 1");
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n / k {
            out.coeffs[i * k] = self.coeffs[i].clone();
        }
        out
    }

    /// Multiset construction `exp(sum_k self(z^k)/k)`; needs a zero constant term.
    pub fn pleth_exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = self.order();
        // b_m = sum_{d | m} d a_d, then m p_m = sum_{j=1}^m b_j p_{m-j}.
        let mut b = vec![BigRational::zero(); n + 1];
        for d in 1..=n {
            if self.coeffs[d].is_zero() {
                continue;
            }
            let da = &self.coeffs[d] * q(d as i64);
            let mut m = d;
            while m <= n {
                b[m] += &da;
                m += d;
            }
        }
        if is_integral(&b) {
            let bi: Vec<BigInt> = b.iter().map(|x| x.numer().clone()).collect();
            let mut p: Vec<BigInt> = vec![BigInt::one()];
            for m in 1..=n {
                let mut acc = BigInt::zero();
                for j in 1..=m {
                    if !bi[j].is_zero() {
                        acc += &bi[j] * &p[m - j];
                    }
                }
                let (quo, rem) = acc.div_rem(&BigInt::from(m));
                if !rem.is_zero() {
                    // non-integral output: fall back to exact rationals
                    return Ok(self.pleth_exp_rational(&b));
                }
                p.push(quo);
            }
            return Ok(TruncSeries {
                coeffs: p.into_iter().map(BigRational::from_integer).collect(),
            });
        }
        Ok(self.pleth_exp_rational(&b))
    }

    fn pleth_exp_rational(&self, b: &[BigRational]) -> Self {
        let n = self.order();
        let mut p = vec![BigRational::one()];
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=m {
                if !b[j].is_zero() {
                    acc += &b[j] * &p[m - j];
                }
            }
            p.push(acc / q(m as i64));
        }
        TruncSeries { coeffs: p }
    }

    /// Coefficients as integers, failing at the first non-integral one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.denom().is_one() {
                    Ok(c.numer().clone())
                } else {
                    Err(SeriesError::NonIntegral {
                        index: i,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Like [`to_integers`](Self::to_integers) but also rejects negative coefficients.
    pub fn to_counts(&self) -> Result<Vec<BigInt>, SeriesError> {
        let v = self.to_integers()?;
        if let Some(i) = v.iter().position(|c| c.is_negative()) {
            return Err(SeriesError::Negative {
                index: i,
                value: v[i].to_string(),
            });
        }
        Ok(v)
    }

    /// Coefficients as `f64`, for quick numerics and plots.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// First index where the two series differ, up to the smaller order.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(z^{})", self, self.order() + 1)
    }
}

impl fmt::Display for TruncSeries {
    /// Polynomial layout `1 + 2 z^3 + 2 z^5`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one();
            match i {
                0 => write!(f, "{}", a)?,
                1 if unit => write!(f, "z")?,
                1 => write!(f, "{} z", a)?,
                _ if unit => write!(f, "z^{}", i)?,
                _ => write!(f, "{} z^{}", a, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: convolve(&self.coeffs, &rhs.coeffs, n),
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: TruncSeries) -> TruncSeries {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: &TruncSeries) -> TruncSeries {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<TruncSeries> for &'a TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: TruncSeries) -> TruncSeries {
                self.$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}
