//! Constants for the link series, from `F = E K Mset(F)`.
//!
//! With `xi(z) = E(z) K(z) exp(sum_{k>=2} F(z^k)/k)` the equation reads
//! `F e^{-F} = xi(z)`, whose branch point sits where `xi(rho) = 1/e` and `F(rho) = 1`.

use crate::error::AsymptoticsError;
use crate::jet::Jet;
use crate::links::{build_f, lbar_from_f};
use crate::real::Real;
use crate::series::TruncSeries;

use super::gamma::gamma;
use super::singular::{local_expansion, square_root_branch};
use super::{Precision, SingularData};

const ZDEG: usize = 8;

/// Constants for the unrooted trees, their multisets and the links.
#[derive(Clone, Debug)]
pub struct LinkConstants {
    pub rho: Real,
    /// `Lbar`: first odd coefficient `c1` and `C = c1 / Gamma(-3/2)`.
    pub lbar: SingularData,
    /// `Lhat`: `c2` and `C = c2 / Gamma(-3/2)`.
    pub lhat: SingularData,
    /// `L` on even and odd indices, growth `rho^(-n/2)`.
    pub l_even: Real,
    pub l_odd: Real,
    /// Order the exact series were computed to.
    pub series_order: usize,
}

fn reals(s: &TruncSeries, p: usize) -> Vec<Real> {
    s.coeffs().iter().map(|c| Real::from_ratio(c, p)).collect()
}

struct Xi {
    f: Vec<Real>,
    /// `k_max` for the sums over `z^k`.
    kmax: usize,
}

impl Xi {
    fn one(x: &Jet) -> Jet {
        Jet::constant(x.value().lift(1), x.is_bivariate(), x.deg())
    }

    fn e_of(x: &Jet) -> Jet {
        let one = Xi::one(x);
        let x2 = x * x;
        let num = &x2 * &(&one + &x2);
        &num * &(&one - &x2).recip()
    }

    fn kbar_of(x: &Jet) -> Jet {
        let one = Xi::one(x);
        let x2 = x * x;
        (&(&x2 * x) * &(&one - &x2).recip()).scale(&x.value().lift(2))
    }

    /// `exp(sum_{k=from}^{kmax} g(x^k) / k)`.
    fn pleth_tail(&self, x: &Jet, from: usize, g: impl Fn(&Jet, usize) -> Jet) -> Jet {
        let mut acc = Xi::one(x).scale(&x.value().lift(0));
        let mut xk = x.powi(from as u32);
        for k in from..=self.kmax {
            let term = g(&xk, k).scale(&x.value().lift(k as i64).recip());
            acc = &acc + &term;
            xk = &xk * x;
        }
        acc.exp()
    }

    // F at x^k only needs the first n coefficients with rho^((k-1) n) below precision
    fn f_at(&self, xk: &Jet, k: usize) -> Jet {
        let n = (self.f.len() / (k - 1)).max(4).min(self.f.len());
        Jet::eval_series(&self.f[..n], xk)
    }

    fn eval(&self, x: &Jet) -> Jet {
        let k = self.pleth_tail(x, 1, |xk, _| Xi::kbar_of(xk));
        let tail = self.pleth_tail(x, 2, |xk, k| self.f_at(xk, k));
        &(&Xi::e_of(x) * &k) * &tail
    }
}

fn eval_truncated(c: &[Real], x: &Jet, k: usize) -> Jet {
    let n = if k <= 1 {
        c.len()
    } else {
        (c.len() / (k - 1)).max(4).min(c.len())
    };
    Jet::eval_series(&c[..n], x)
}

/// Computes the link constants at the given precision.
pub fn link_constants(prec: Precision) -> Result<LinkConstants, AsymptoticsError> {
    if prec.digits < 20 {
        return Err(AsymptoticsError::Precision {
            digits: 20,
            precision: prec.digits,
        });
    }
    let p = prec.bits();
    let tol = prec.tolerance();
    // rough radius from a short series, then enough terms for rho^N far below precision
    let rough = build_f(80)?;
    let r80 = Real::from_ratio(rough.coeff(79), p) / Real::from_ratio(rough.coeff(80), p);
    let r78 = Real::from_ratio(rough.coeff(77), p) / Real::from_ratio(rough.coeff(78), p);
    let rho_hi = r80.clone().max(r78).to_f64() * 1.02;
    let need = (prec.digits as f64 + 20.0) * std::f64::consts::LN_10 / -rho_hi.ln();
    let order = (need.ceil() as usize + 10).max(90);
    let f_exact = build_f(order + 2)?;
    let lbar_exact = lbar_from_f(&f_exact, order)?;
    let f = reals(&f_exact.truncate(order), p);
    let xi = Xi {
        f: f.clone(),
        kmax: order / 2 + 2,
    };
    let e_inv = (-Real::one(p)).exp();

    // Newton on xi(rho) = 1/e, started from the rough radius
    let mut rho = Real::from_f64(r80.to_f64(), p);
    let mut converged = false;
    for _ in 0..100 {
        let j = xi.eval(&Jet::var1(rho.clone(), false, 1));
        let step = (&j.get(0, 0) - &e_inv) / &j.get(1, 0);
        rho = &rho - &step;
        if step.abs() < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(AsymptoticsError::NoConvergence("xi(rho) = 1/e".into()));
    }
    // geometric tail of F(z^2): next terms scale like rho^N
    let tail =
        f.last().unwrap() * &rho.powi(2 * order as i64) * Real::from_i64((order as i64).pow(4), p);
    if tail > tol {
        return Err(AsymptoticsError::TailBound(format!(
            "F tail {:e} at N = {order}",
            tail.to_f64()
        )));
    }

    // F - 1 as a series in Z from (1 + d) - e xi(rho(1-u)) e^d = 0
    let deg = ZDEG + 2;
    let mut zjet = Jet::constant(rho.clone(), false, deg);
    zjet.set(1, 0, -rho.clone());
    let xi_u = xi.eval(&zjet).scale(&Real::one(p).exp()).to_bivariate();
    let phi = |z: &Jet, y: &Jet| -> Jet {
        let _ = z;
        let ey = (y - &Jet::constant(Real::one(p), true, y.deg())).exp();
        y - &(&xi_u.truncate(y.deg()) * &ey)
    };
    let one = Real::one(p);
    let local = local_expansion(&phi, &rho, &one, deg);
    let residual = local.get(0, 0).abs() + local.get(0, 1).abs();
    let fz = square_root_branch(&local, ZDEG, &tol)?.add_const(&one);

    // Lbar(Z) = T + E/2 (T(z^2) - T^2) with T = F/E; E and T(z^2) are analytic at rho
    let e_z = Xi::e_of(&zjet).in_z(ZDEG);
    let tp_exact = f_exact.div_shifted(&crate::links::build_e(order + 2))?;
    let tp = reals(&tp_exact, p);
    let tp2_z = eval_truncated(&tp, &(&zjet * &zjet), 2).in_z(ZDEG);
    let t = &fz * &e_z.recip();
    let half = Real::one(p) / Real::from_i64(2, p);
    let lbar_z = &t + &(&e_z * &(&tp2_z - &(&t * &t))).scale(&half);
    if lbar_z.get(1, 0).abs() > tol {
        return Err(AsymptoticsError::Degenerate(format!(
            "Lbar has a Z term {:e}",
            lbar_z.get(1, 0).to_f64()
        )));
    }

    // Lhat(Z) = exp(Lbar(Z) - 1) exp(sum_{k>=2} (Lbar(z^k) - 1)/k)
    let lb = reals(&lbar_exact, p);
    let mut lb_minus = lb.clone();
    lb_minus[0] = Real::zero(p);
    let lxi = Xi {
        f: lb_minus.clone(),
        kmax: order / 2 + 2,
    };
    let analytic = lxi
        .pleth_tail(&zjet, 2, |xk, k| eval_truncated(&lb_minus, xk, k))
        .in_z(ZDEG);
    let lhat_z = &lbar_z.add_const(&-Real::one(p)).exp() * &analytic;

    // L even part: Lhat(x)/(1-x) at x = z^2, two conjugate singularities
    let geo = (&Jet::constant(Real::one(p), false, deg) - &zjet)
        .recip()
        .in_z(ZDEG);
    let h = &lhat_z * &geo;
    let two = Real::from_i64(2, p);
    let l_even = &h.get(3, 0) * &two.powf(&(Real::from_i64(5, p) / &two));
    let l_odd = &l_even * &rho.sqrt();

    let g32 = gamma(&(-Real::from_i64(3, p) / &two));
    let alpha = Real::from_i64(3, p) / &two;
    let mk = |name: &str, z: &Jet, y0: Real| {
        let c = z.get(3, 0);
        SingularData {
            family: name.to_string(),
            rho: rho.clone(),
            y_at_rho: y0,
            alpha: alpha.clone(),
            expansion: z.coeffs(),
            transfer_constant: &c / &g32,
            c,
            residual: residual.clone(),
        }
    };
    Ok(LinkConstants {
        rho: rho.clone(),
        lbar: mk("Lbar", &lbar_z, one.clone()),
        lhat: mk("Lhat", &lhat_z, one.clone()),
        l_even,
        l_odd,
        series_order: order,
    })
}
