use crate::error::AsymptoticsError;
use crate::jet::Jet;
use crate::maps::{elimination_polynomial, solve, MapFamily};
use crate::real::Real;

use super::gamma::gamma;
use super::singular::{branch_point, local_expansion, square_root_branch, Defining};
use super::{GrowthDescription, Precision, SingularData};

/// `T_r(x) = x^r B(x^2)^r / sqrt(1 - 4x^2)` with `B(u) = 2 / (1 + sqrt(1 - 4u))`.
pub fn unknot_tr_closed_form(r: u32, x: &Jet) -> Jet {
    let one = Jet::constant(x.value().lift(1), x.is_bivariate(), x.deg());
    let x2 = x * x;
    let root = (&one - &x2.scale(&x.value().lift(4))).sqrt();
    let b = (&one + &root).recip().scale(&x.value().lift(2));
    &(x.powi(r) * b.powi(r)) * &root.recip()
}

struct UnknotDefining;

impl Defining for UnknotDefining {
    fn eval(&self, z: &Jet, y: &Jet) -> Jet {
        let w = z + &(&(z * z) * y);
        let x = &w * &w;
        let t1 = unknot_tr_closed_form(1, &x);
        let t3 = unknot_tr_closed_form(3, &x);
        elimination_polynomial(MapFamily::Unknot).eval(&[z.clone(), y.clone(), t1, t3])
    }
}

struct PolyDefining(MapFamily);

impl Defining for PolyDefining {
    fn eval(&self, z: &Jet, y: &Jet) -> Jet {
        elimination_polynomial(self.0).eval(&[z.clone(), y.clone()])
    }
}

/// The function `Phi(z, y)` whose zero set contains `y = M(z)` for the family.
pub fn map_defining(family: MapFamily) -> Box<dyn Defining> {
    match family {
        MapFamily::Unknot => Box::new(UnknotDefining),
        f => Box::new(PolyDefining(f)),
    }
}

const SERIES_ORDER: usize = 64;
const ZDEG: usize = 8;

/// Branch point and constants of `z M(z)`; the series is odd, so `c` doubles the `Z` term.
pub fn map_constants(family: MapFamily, prec: Precision) -> Result<SingularData, AsymptoticsError> {
    if prec.digits < 20 {
        return Err(AsymptoticsError::Precision {
            digits: 20,
            precision: prec.digits,
        });
    }
    let p = prec.bits();
    let tol = prec.tolerance();
    let sol = solve(family, SERIES_ORDER)?;
    let m: Vec<Real> = sol
        .m
        .coeffs()
        .iter()
        .map(|c| Real::from_ratio(c, p))
        .collect();
    let top = (0..m.len())
        .rev()
        .find(|&n| !m[n].is_zero())
        .expect("nonzero series");
    let rho0 = (&m[top - 2] / &m[top]).sqrt();
    let partial = |z: &Real| {
        let mut acc = Real::zero(p);
        for c in m.iter().rev() {
            acc = &acc * z + c;
        }
        acc
    };
    let phi = map_defining(family);
    let mut best: Option<(Real, Real, Real)> = None;
    let y0 = partial(&rho0);
    for zf in [1.0, 0.98, 1.02] {
        for yf in [1.0, 1.05, 1.1, 1.2, 1.4] {
            let zs = &rho0 * &Real::from_f64(zf, p);
            let ys = &y0 * &Real::from_f64(yf, p);
            let Ok((rho, s)) = branch_point(phi.as_ref(), &zs, &ys, &tol, 200) else {
                continue;
            };
            if rho.is_negative() || rho > Real::one(p) || s.is_negative() {
                continue;
            }
            if ((&rho / &rho0) - Real::one(p)).abs().to_f64() > 0.05 {
                continue;
            }
            // partial sums increase towards s with a tail of order N a_N rho^N
            let extrapolated =
                partial(&rho) + &m[top] * &rho.powi(top as i64) * Real::from_i64(top as i64, p);
            let gap = ((&s - &extrapolated) / &s).abs();
            if best.as_ref().is_none_or(|b| gap < b.2) {
                best = Some((rho, s, gap));
            }
        }
    }
    let (rho, s, gap) = best.ok_or_else(|| {
        AsymptoticsError::NoConvergence(format!("{family}: no branch point found"))
    })?;
    if gap.to_f64() > 0.05 {
        return Err(AsymptoticsError::WrongBranch(format!(
            "{family}: y(rho) = {} disagrees with the partial sums by {:.3}",
            s.to_decimal(10),
            gap.to_f64()
        )));
    }
    let local = local_expansion(phi.as_ref(), &rho, &s, ZDEG + 2);
    let residual = local.get(0, 0).abs() + local.get(0, 1).abs();
    let delta = square_root_branch(&local, ZDEG, &tol)?;
    let y = delta.add_const(&s);
    let mut zfac = vec![Real::zero(p); ZDEG + 1];
    zfac[0] = rho.clone();
    zfac[2] = -rho.clone();
    let expansion = (&Jet::from_coeffs(zfac, ZDEG) * &y).coeffs();
    let c = &expansion[1] * &Real::from_i64(2, p);
    let half = Real::one(p) / Real::from_i64(2, p);
    let transfer_constant = &c / &gamma(&-half.clone());
    Ok(SingularData {
        family: family.name().to_string(),
        rho,
        y_at_rho: s,
        alpha: half,
        expansion,
        c,
        transfer_constant,
        residual,
    })
}

fn crossing_factor(family: MapFamily, p: usize) -> Real {
    match family {
        MapFamily::All => Real::from_i64(2, p).sqrt(),
        _ => Real::one(p),
    }
}

/// Growth of the rooted diagram counts `plus[n]`, `n` even.
pub fn rooted_growth(family: MapFamily, data: &SingularData) -> GrowthDescription {
    let p = data.rho.prec();
    GrowthDescription {
        family: family.name().to_string(),
        prefactor: data.transfer_constant.clone(),
        exponent: Real::from_i64(-3, p) / Real::from_i64(2, p),
        base: crossing_factor(family, p) / &data.rho,
        period: 2,
        offset: 0,
        note: "rooted diagrams, even n only".into(),
    }
}

/// Unrooted diagrams: the rooted form divided by `2n`.
pub fn unrooted_constants(family: MapFamily, data: &SingularData) -> GrowthDescription {
    let p = data.rho.prec();
    let g = rooted_growth(family, data);
    GrowthDescription {
        prefactor: &g.prefactor / &Real::from_i64(2, p),
        exponent: Real::from_i64(-5, p) / Real::from_i64(2, p),
        note: "unrooted diagrams: rooted form times 1/(2n), even n only".into(),
        ..g
    }
}
