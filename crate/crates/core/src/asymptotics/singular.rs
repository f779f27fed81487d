//! Square-root branch points of implicitly defined series.

use crate::error::AsymptoticsError;
use crate::jet::Jet;
use crate::real::Real;

/// A defining function `Phi(z, y)` evaluated on bivariate jets.
pub trait Defining {
    fn eval(&self, z: &Jet, y: &Jet) -> Jet;
}

impl<F: Fn(&Jet, &Jet) -> Jet> Defining for F {
    fn eval(&self, z: &Jet, y: &Jet) -> Jet {
        self(z, y)
    }
}

/// Solves `Phi = 0, Phi_y = 0` by damped Newton iteration from `(z0, y0)`.
pub fn branch_point<D: Defining + ?Sized>(
    phi: &D,
    z0: &Real,
    y0: &Real,
    tol: &Real,
    max_iter: usize,
) -> Result<(Real, Real), AsymptoticsError> {
    let mut z = z0.clone();
    let mut y = y0.clone();
    let residual = |z: &Real, y: &Real| {
        let j = phi.eval(&Jet::var1(z.clone(), true, 2), &Jet::var2(y.clone(), 2));
        let g = j.get(0, 0);
        let gy = j.get(0, 1);
        (j, g.abs() + gy.abs())
    };
    let (mut j, mut res) = residual(&z, &y);
    for _ in 0..max_iter {
        let (g, gz, gy) = (j.get(0, 0), j.get(1, 0), j.get(0, 1));
        let (gzy, gyy) = (j.get(1, 1), &j.get(0, 2) * &z.lift(2));
        // Jacobian of (Phi, Phi_y) in (z, y)
        let det = &gz * &gyy - &gy * &gzy;
        if det.is_zero() {
            return Err(AsymptoticsError::NoConvergence("singular Jacobian".into()));
        }
        let dz = (&g * &gyy - &gy * &gy) / &det;
        let dy = (&gz * &gy - &gzy * &g) / &det;
        let mut step = z.lift(1);
        let mut accepted = false;
        for _ in 0..40 {
            let zn = &z - &(&dz * &step);
            let yn = &y - &(&dy * &step);
            let (jn, rn) = residual(&zn, &yn);
            if rn < res || rn.is_zero() {
                z = zn;
                y = yn;
                j = jn;
                res = rn;
                accepted = true;
                break;
            }
            step = step / z.lift(2);
        }
        let size = (&dz * &step).abs() + (&dy * &step).abs();
        if size < *tol || res.is_zero() {
            return Ok((z, y));
        }
        if !accepted {
            // no descent direction left: accept only if already at tolerance
            if res < *tol {
                return Ok((z, y));
            }
            return Err(AsymptoticsError::NoConvergence(format!(
                "stalled at residual {:e}",
                res.to_f64()
            )));
        }
    }
    Err(AsymptoticsError::NoConvergence(format!(
        "{max_iter} iterations, residual {:e}",
        res.to_f64()
    )))
}

/// Taylor coefficients of `Phi(rho(1-u), s+delta)` up to total degree `deg`.
pub fn local_expansion<D: Defining + ?Sized>(phi: &D, rho: &Real, s: &Real, deg: usize) -> Jet {
    let mut z = Jet::constant(rho.clone(), true, deg);
    if deg >= 1 {
        z.set(1, 0, -rho.clone());
    }
    phi.eval(&z, &Jet::var2(s.clone(), deg))
}

/// Solves `Phi(Z^2, delta) = 0` for `delta = d_1 Z + d_2 Z^2 + ...` with `d_1 < 0`.
///
/// `local` holds the coefficients `P_ij` of `u^i delta^j`; it needs total degree `zdeg + 2`.
pub fn square_root_branch(local: &Jet, zdeg: usize, tol: &Real) -> Result<Jet, AsymptoticsError> {
    let p = local.prec();
    let (p00, p01) = (local.get(0, 0), local.get(0, 1));
    if p00.abs() > *tol || p01.abs() > *tol {
        return Err(AsymptoticsError::Degenerate(format!(
            "not a critical point: |Phi| = {:e}, |Phi_y| = {:e}",
            p00.to_f64(),
            p01.to_f64()
        )));
    }
    let (p10, p02) = (local.get(1, 0), local.get(0, 2));
    if p02.is_zero() || p10.is_zero() {
        return Err(AsymptoticsError::Degenerate(
            "vanishing Phi_u or Phi_yy".into(),
        ));
    }
    let ratio = -(&p10 / &p02);
    if ratio.is_negative() {
        return Err(AsymptoticsError::Degenerate(
            "branch is not real below the singularity".into(),
        ));
    }
    let edeg = zdeg.saturating_sub(1);
    let zvar = Jet::var1(Real::zero(p), false, edeg);
    let mut zpow = vec![Jet::constant(Real::one(p), false, edeg)];
    for k in 1..=2 * local.deg() + 2 {
        let next = &zpow[k - 1] * &zvar;
        zpow.push(next);
    }
    let mut e = Jet::constant(-ratio.sqrt(), false, edeg);
    for _ in 0..=edeg + 1 {
        let mut epow = vec![Jet::constant(Real::one(p), false, edeg)];
        for k in 1..=local.deg() {
            let next = &epow[k - 1] * &e;
            epow.push(next);
        }
        let mut r = Jet::constant(p10.clone(), false, edeg);
        for i in 0..=local.deg() {
            for j in 0..=local.deg() - i {
                if (i, j) == (0, 0) || (i, j) == (0, 1) || (i, j) == (1, 0) || (i, j) == (0, 2) {
                    continue;
                }
                let shift = 2 * i + j - 2;
                if shift > edeg {
                    continue;
                }
                let c = local.get(i, j);
                if c.is_zero() {
                    continue;
                }
                r = &r + &(&zpow[shift] * &epow[j]).scale(&c);
            }
        }
        let inner = r.scale(&-p02.recip());
        e = -inner.sqrt();
    }
    let mut d = vec![Real::zero(p); zdeg + 1];
    for (k, c) in e.coeffs().into_iter().enumerate() {
        if k < zdeg {
            d[k + 1] = c;
        }
    }
    Ok(Jet::from_coeffs(d, zdeg))
}
