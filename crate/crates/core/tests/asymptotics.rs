use k4links_core::asymptotics::*;
use k4links_core::links::build_lbar;
use k4links_core::maps::{plus_counts, solve, MapFamily};
use k4links_core::real::Real;

fn ratio(exact: &num_bigint::BigInt, predicted: &Real) -> f64 {
    (Real::from_bigint(exact, predicted.prec()) / predicted).to_f64()
}

#[test]
fn gamma_at_negative_half_integers() {
    let prec = Precision::default();
    let p = prec.bits();
    let pi = Real::pi(p);
    let g12 = gamma(&(Real::from_i64(-1, p) / Real::from_i64(2, p)));
    let g32 = gamma(&(Real::from_i64(-3, p) / Real::from_i64(2, p)));
    let want12 = -(pi.sqrt() * Real::from_i64(2, p));
    let want32 = pi.sqrt() * Real::from_i64(4, p) / Real::from_i64(3, p);
    assert!(((&g12 - &want12) / &want12).abs() < prec.tolerance());
    assert!(((&g32 - &want32) / &want32).abs() < prec.tolerance());
}

#[test]
fn map_constants_predict_the_series() {
    let prec = Precision::default();
    for f in MapFamily::ALL {
        let d = map_constants(f, prec).unwrap();
        assert!(
            d.residual < prec.tolerance(),
            "{f} residual {:e}",
            d.residual.to_f64()
        );
        assert!(!d.rho.is_negative() && d.rho < Real::one(d.rho.prec()));
        let g = rooted_growth(f, &d);
        let plus = plus_counts(&solve(f, 63).unwrap()).unwrap();
        let r32 = ratio(&plus[32], &g.predict(32));
        let r64 = ratio(&plus[64], &g.predict(64));
        assert!(
            (r64 - 1.0).abs() < (r32 - 1.0).abs(),
            "{f}: {r32} then {r64}"
        );
        assert!((r64 - 1.0).abs() < 0.05, "{f}: {r64}");
        let u = unrooted_constants(f, &d);
        assert_eq!(u.base, g.base);
        assert_eq!(
            u.prefactor,
            &g.prefactor / &Real::from_i64(2, g.prefactor.prec())
        );
    }
}

#[test]
fn link_constants_predict_the_series() {
    let prec = Precision { digits: 40 };
    let l = link_constants(prec).unwrap();
    assert!(l.lbar.residual < prec.tolerance());
    let lbar = build_lbar(200).unwrap().to_integers().unwrap();
    let p = l.rho.prec();
    let base = Real::one(p) / &l.rho;
    let r100 = ratio(&lbar[100], &l.lbar.predicted(100, &base));
    let r200 = ratio(&lbar[200], &l.lbar.predicted(200, &base));
    assert!((r200 - 1.0).abs() < (r100 - 1.0).abs());
    assert!((r200 - 1.0).abs() < 0.1, "{r200}");
}

#[test]
fn knot_ratios_approach_one() {
    let r = knot_ratio(&[200, 800], Precision { digits: 30 });
    let (a, b) = (r[0].1.to_f64(), r[1].1.to_f64());
    assert!((b - 1.0).abs() < (a - 1.0).abs());
}

#[test]
fn low_precision_is_rejected() {
    assert!(map_constants(MapFamily::All, Precision { digits: 10 }).is_err());
    assert!(link_constants(Precision { digits: 10 }).is_err());
}

// polynomial extrapolation in 1/n to 1/n = 0 (Neville)
fn extrapolate(points: &[(f64, f64)]) -> f64 {
    let x: Vec<f64> = points.iter().map(|p| 1.0 / p.0).collect();
    let mut y: Vec<f64> = points.iter().map(|p| p.1).collect();
    for k in 1..y.len() {
        for i in (k..y.len()).rev() {
            y[i] = (x[i] * y[i - 1] - x[i - k] * y[i]) / (x[i] - x[i - k]);
        }
    }
    *y.last().unwrap()
}

// M1 has a nearby subdominant term, so only short windows are stable
const WINDOW: usize = 4;
const LIMIT_TOL: f64 = 1e-4;

#[test]
fn map_ratios_extrapolate_to_one() {
    let prec = Precision::default();
    for f in MapFamily::ALL {
        let d = map_constants(f, prec).unwrap();
        let g = rooted_growth(f, &d);
        let plus = plus_counts(&solve(f, 63).unwrap()).unwrap();
        let pts: Vec<(f64, f64)> = (64 - 2 * (WINDOW - 1)..=64)
            .step_by(2)
            .map(|n| (n as f64, ratio(&plus[n], &g.predict(n))))
            .collect();
        let limit = extrapolate(&pts);
        assert!((limit - 1.0).abs() < LIMIT_TOL, "{f}: {limit}");
    }
}

#[test]
fn link_ratios_extrapolate_to_one() {
    let prec = Precision::default();
    let l = link_constants(prec).unwrap();
    let top = 500;
    let series = k4links_core::links::build_l(top)
        .unwrap()
        .to_integers()
        .unwrap();
    let p = l.rho.prec();
    let g = gamma(&(Real::from_i64(-3, p) / Real::from_i64(2, p)));
    for (c, last) in [(&l.l_even, top), (&l.l_odd, top - 1)] {
        let pts: Vec<(f64, f64)> = (last - 2 * (WINDOW - 1)..=last)
            .step_by(2)
            .map(|n| {
                let nn = Real::from_i64(n as i64, p);
                let pred = c / &g
                    * nn.powf(&Real::from_f64(-2.5, p))
                    * l.rho
                        .powf(&(Real::from_i64(-(n as i64), p) / Real::from_i64(2, p)));
                (n as f64, ratio(&series[n], &pred))
            })
            .collect();
        let limit = extrapolate(&pts);
        assert!((limit - 1.0).abs() < LIMIT_TOL, "L at n = {last}: {limit}");
    }
}
