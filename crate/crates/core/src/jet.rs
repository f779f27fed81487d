//! Truncated Taylor polynomials in one or two variables over [`Real`].
//!
//! Used both for derivatives (Newton steps, local expansions at a point) and for
//! series in `Z = sqrt(1 - z/rho)` around a square-root singularity.

use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::Ring;
use crate::real::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    two: bool,
    deg: usize,
    c: Vec<Real>,
}

impl Jet {
    fn width(two: bool, deg: usize) -> usize {
        if two {
            deg + 1
        } else {
            1
        }
    }

    fn blank(two: bool, deg: usize, prec: usize) -> Jet {
        let w = Jet::width(two, deg);
        Jet {
            two,
            deg,
            c: vec![Real::zero(prec); (deg + 1) * w],
        }
    }

    pub fn constant(v: Real, two: bool, deg: usize) -> Jet {
        let mut j = Jet::blank(two, deg, v.prec());
        j.c[0] = v;
        j
    }

    /// `at + h` in the first variable.
    pub fn var1(at: Real, two: bool, deg: usize) -> Jet {
        let mut j = Jet::constant(at.clone(), two, deg);
        if deg >= 1 {
            j.set(1, 0, at.lift(1));
        }
        j
    }

    /// `at + k` in the second variable of a bivariate jet.
    pub fn var2(at: Real, deg: usize) -> Jet {
        let mut j = Jet::constant(at.clone(), true, deg);
        if deg >= 1 {
            j.set(0, 1, at.lift(1));
        }
        j
    }

    /// Univariate jet from coefficients, zero-padded or cut to `deg`.
    pub fn from_coeffs(mut c: Vec<Real>, deg: usize) -> Jet {
        let prec = c[0].prec();
        c.resize(deg + 1, Real::zero(prec));
        Jet { two: false, deg, c }
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn is_bivariate(&self) -> bool {
        self.two
    }

    pub fn prec(&self) -> usize {
        self.c[0].prec()
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * Jet::width(self.two, self.deg) + j
    }

    /// Coefficient of `h^i k^j`; zero outside the truncation.
    pub fn get(&self, i: usize, j: usize) -> Real {
        if i + j > self.deg || (!self.two && j > 0) {
            return Real::zero(self.prec());
        }
        self.c[self.idx(i, j)].clone()
    }

    pub fn set(&mut self, i: usize, j: usize, v: Real) {
        assert!(i + j <= self.deg && (self.two || j == 0));
        let k = self.idx(i, j);
        self.c[k] = v;
    }

    pub fn value(&self) -> Real {
        self.c[0].clone()
    }

    /// Univariate coefficients `[c_0, ..., c_deg]`.
    pub fn coeffs(&self) -> Vec<Real> {
        (0..=self.deg).map(|i| self.get(i, 0)).collect()
    }

    fn indices(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 0..=self.deg {
            if self.two {
                for j in 0..=self.deg - i {
                    v.push((i, j));
                }
            } else {
                v.push((i, 0));
            }
        }
        v
    }

    fn zip(&self, o: &Jet, f: impl Fn(&Real, &Real) -> Real) -> Jet {
        assert_eq!(self.two, o.two, "mixing univariate and bivariate jets");
        let deg = self.deg.min(o.deg);
        let mut out = Jet::blank(self.two, deg, self.prec());
        for (i, j) in out.indices() {
            out.set(i, j, f(&self.get(i, j), &o.get(i, j)));
        }
        out
    }

    pub fn scale(&self, s: &Real) -> Jet {
        Jet {
            two: self.two,
            deg: self.deg,
            c: self.c.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add_const(&self, s: &Real) -> Jet {
        let mut out = self.clone();
        out.c[0] = &out.c[0] + s;
        out
    }

    /// Applies `f` given its Taylor coefficients `a_k` at the constant term.
    pub fn apply_taylor(&self, a: &[Real]) -> Jet {
        let mut r = self.clone();
        r.c[0] = Real::zero(self.prec());
        let mut acc = Jet::constant(a[self.deg.min(a.len() - 1)].clone(), self.two, self.deg);
        for k in (0..self.deg.min(a.len() - 1)).rev() {
            acc = (&acc * &r).add_const(&a[k]);
        }
        acc
    }

    pub fn exp(&self) -> Jet {
        let e = self.value().exp();
        let mut a = vec![e.clone()];
        for k in 1..=self.deg {
            let next = &a[k - 1] / &e.lift(k as i64);
            a.push(next);
        }
        self.apply_taylor(&a)
    }

    pub fn recip(&self) -> Jet {
        let c0 = self.value();
        let inv = c0.recip();
        let mut a = vec![inv.clone()];
        for k in 1..=self.deg {
            let next = -(&a[k - 1] * &inv);
            a.push(next);
        }
        self.apply_taylor(&a)
    }

    /// Principal square root; needs a positive constant term.
    pub fn sqrt(&self) -> Jet {
        let c0 = self.value();
        let s = c0.sqrt();
        let mut a = vec![s.clone()];
        // a_k = a_{k-1} (1/2 - (k-1)) / (k c0)
        for k in 1..=self.deg {
            let num = &c0.lift(3) - &c0.lift(2 * k as i64);
            let next = &a[k - 1] * &num / &(&c0.lift(2 * k as i64) * &c0);
            a.push(next);
        }
        self.apply_taylor(&a)
    }

    pub fn ln(&self) -> Jet {
        let c0 = self.value();
        let mut a = vec![c0.ln()];
        let inv = c0.recip();
        let mut p = inv.clone();
        for k in 1..=self.deg {
            let t = &p / &c0.lift(k as i64);
            a.push(if k % 2 == 1 { t } else { -t });
            p = &p * &inv;
        }
        self.apply_taylor(&a)
    }

    pub fn powi(&self, n: u32) -> Jet {
        let mut acc = Jet::constant(self.value().lift(1), self.two, self.deg);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `sum_n a_n x^n` by Horner's rule.
    pub fn eval_series(a: &[Real], x: &Jet) -> Jet {
        let mut acc = Jet::constant(
            a.last().cloned().unwrap_or_else(|| x.value().lift(0)),
            x.two,
            x.deg,
        );
        for k in (0..a.len().saturating_sub(1)).rev() {
            acc = (&acc * x).add_const(&a[k]);
        }
        acc
    }

    /// Embeds a univariate jet as a bivariate one in the first variable.
    pub fn to_bivariate(&self) -> Jet {
        assert!(!self.two);
        let mut out = Jet::blank(true, self.deg, self.prec());
        for i in 0..=self.deg {
            out.set(i, 0, self.get(i, 0));
        }
        out
    }

    /// Substitutes `u = Z^2` in a univariate jet, giving a jet of degree `deg` in `Z`.
    pub fn in_z(&self, deg: usize) -> Jet {
        assert!(!self.two);
        let mut c = vec![Real::zero(self.prec()); deg + 1];
        for i in 0..=self.deg {
            if 2 * i <= deg {
                c[2 * i] = self.get(i, 0);
            }
        }
        Jet::from_coeffs(c, deg)
    }

    /// Truncates to a smaller degree.
    pub fn truncate(&self, deg: usize) -> Jet {
        let deg = deg.min(self.deg);
        let mut out = Jet::blank(self.two, deg, self.prec());
        for (i, j) in out.indices() {
            out.set(i, j, self.get(i, j));
        }
        out
    }
}

impl<'a> Add<&'a Jet> for &'a Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        self.zip(o, |a, b| a + b)
    }
}

impl<'a> Sub<&'a Jet> for &'a Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        self.zip(o, |a, b| a - b)
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            two: self.two,
            deg: self.deg,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl<'a> Mul<&'a Jet> for &'a Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        assert_eq!(self.two, o.two, "mixing univariate and bivariate jets");
        let deg = self.deg.min(o.deg);
        let mut out = Jet::blank(self.two, deg, self.prec().max(o.prec()));
        let left: Vec<(usize, usize, Real)> = self
            .indices()
            .into_iter()
            .filter(|&(i, j)| i + j <= deg)
            .map(|(i, j)| (i, j, self.get(i, j)))
            .filter(|t| !t.2.is_zero())
            .collect();
        let right: Vec<(usize, usize, Real)> = o
            .indices()
            .into_iter()
            .filter(|&(i, j)| i + j <= deg)
            .map(|(i, j)| (i, j, o.get(i, j)))
            .filter(|t| !t.2.is_zero())
            .collect();
        for (i1, j1, a) in &left {
            for (i2, j2, b) in &right {
                if i1 + i2 + j1 + j2 <= deg {
                    let k = out.idx(i1 + i2, j1 + j2);
                    out.c[k] = &out.c[k] + &(a * b);
                }
            }
        }
        out
    }
}

macro_rules! jet_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Jet> for Jet {
            type Output = Jet;
            fn $m(self, o: Jet) -> Jet {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Jet> for Jet {
            type Output = Jet;
            fn $m(self, o: &Jet) -> Jet {
                (&self).$m(o)
            }
        }
    };
}
jet_owned!(Add, add);
jet_owned!(Sub, sub);
jet_owned!(Mul, mul);

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}

impl Ring for Jet {
    fn one_like(&self) -> Self {
        Jet::constant(self.value().lift(1), self.two, self.deg)
    }
    fn zero_like(&self) -> Self {
        Jet::constant(self.value().lift(0), self.two, self.deg)
    }
    fn add_r(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_r(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_i(&self, c: i64) -> Self {
        self.scale(&self.value().lift(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::bits_for_digits;

    fn close(a: &Real, b: f64) -> bool {
        (a.to_f64() - b).abs() < 1e-12 * (1.0 + b.abs())
    }

    #[test]
    fn exp_ln_roundtrip() {
        let p = bits_for_digits(40);
        let x = Jet::var1(Real::from_f64(0.3, p), false, 6);
        let y = x.exp().ln();
        for i in 0..=6 {
            assert!((&y.get(i, 0) - &x.get(i, 0)).abs().to_f64() < 1e-40);
        }
    }

    #[test]
    fn sqrt_squares_back() {
        let p = bits_for_digits(40);
        let x = Jet::var1(Real::from_f64(2.0, p), true, 5) * Jet::var2(Real::from_f64(1.5, p), 5);
        let s = x.sqrt();
        let back = &s * &s;
        for i in 0..=5 {
            for j in 0..=5 - i {
                assert!((&back.get(i, j) - &x.get(i, j)).abs().to_f64() < 1e-40);
            }
        }
    }

    #[test]
    fn recip_of_one_minus_h() {
        let p = bits_for_digits(30);
        let x = Jet::var1(Real::zero(p), false, 5);
        let g = (Jet::constant(Real::one(p), false, 5) - x).recip();
        for i in 0..=5 {
            assert!(close(&g.get(i, 0), 1.0));
        }
    }

    #[test]
    fn horner_matches_direct() {
        let p = bits_for_digits(30);
        let a: Vec<Real> = [1.0, 2.0, 3.0]
            .iter()
            .map(|&v| Real::from_f64(v, p))
            .collect();
        let x = Jet::var1(Real::from_f64(0.5, p), false, 2);
        let y = Jet::eval_series(&a, &x);
        // 1 + 2x + 3x^2 at 0.5: value 2.75, slope 5, half second derivative 3
        assert!(close(&y.get(0, 0), 2.75) && close(&y.get(1, 0), 5.0) && close(&y.get(2, 0), 3.0));
    }
}
