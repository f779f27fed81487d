//! Asymptotic constant reports.

use clap::ValueEnum;
use k4links_core::asymptotics::{
    gamma, knot_asymptotics, knot_ratio, link_constants, map_constants, rooted_growth,
    unrooted_constants, GrowthDescription, Precision, SingularData,
};
use k4links_core::maps::MapFamily;
use k4links_core::real::Real;
use k4links_core::{AsymptoticsError, ConstantsReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstantsFamily {
    #[value(name = "Lbar")]
    Lbar,
    #[value(name = "Lhat")]
    Lhat,
    #[value(name = "L")]
    L,
    #[value(name = "Knots")]
    Knots,
    #[value(name = "M")]
    M,
    #[value(name = "M1")]
    M1,
    #[value(name = "M2")]
    M2,
    #[value(name = "unrootedM")]
    UnrootedM,
    #[value(name = "unrootedM1")]
    UnrootedM1,
    #[value(name = "unrootedM2")]
    UnrootedM2,
}

impl ConstantsFamily {
    pub fn name(self) -> &'static str {
        match self {
            ConstantsFamily::Lbar => "Lbar",
            ConstantsFamily::Lhat => "Lhat",
            ConstantsFamily::L => "L",
            ConstantsFamily::Knots => "Knots",
            ConstantsFamily::M => "M",
            ConstantsFamily::M1 => "M1",
            ConstantsFamily::M2 => "M2",
            ConstantsFamily::UnrootedM => "unrootedM",
            ConstantsFamily::UnrootedM1 => "unrootedM1",
            ConstantsFamily::UnrootedM2 => "unrootedM2",
        }
    }

    fn map_family(self) -> Option<(MapFamily, bool)> {
        match self {
            ConstantsFamily::M => Some((MapFamily::All, false)),
            ConstantsFamily::M1 => Some((MapFamily::Minimal, false)),
            ConstantsFamily::M2 => Some((MapFamily::Unknot, false)),
            ConstantsFamily::UnrootedM => Some((MapFamily::All, true)),
            ConstantsFamily::UnrootedM1 => Some((MapFamily::Minimal, true)),
            ConstantsFamily::UnrootedM2 => Some((MapFamily::Unknot, true)),
            _ => None,
        }
    }
}

/// Sizes at which the knot ratio table is evaluated.
pub const KNOT_RATIO_SIZES: [usize; 4] = [100, 500, 1000, 2000];

fn singular_entries(r: &mut ConstantsReport, d: &SingularData, digits: usize, c_name: &str) {
    r.push("rho", d.rho.to_decimal(digits));
    r.push(
        "1/rho",
        (Real::one(d.rho.prec()) / &d.rho).to_decimal(digits),
    );
    r.push("y(rho)", d.y_at_rho.to_decimal(digits));
    r.push("alpha", d.alpha.to_decimal(digits));
    r.push(c_name, d.c.to_decimal(digits));
    r.push("C", d.transfer_constant.to_decimal(digits));
    r.push("residual", format!("{:.3e}", d.residual.to_f64()));
}

fn growth_entries(r: &mut ConstantsReport, g: &GrowthDescription, digits: usize) {
    r.push("prefactor", g.prefactor.to_decimal(digits));
    r.push("exponent", g.exponent.to_decimal(digits));
    r.push("base", g.base.to_decimal(digits));
    r.push("period", g.period.to_string());
    r.notes.push(g.note.clone());
}

/// Computes the report; `digits` significant digits are printed from a computation at
/// `precision` decimal digits.
pub fn compute(
    family: ConstantsFamily,
    digits: usize,
    precision: usize,
) -> Result<ConstantsReport, AsymptoticsError> {
    if digits + 10 > precision {
        return Err(AsymptoticsError::Precision { digits, precision });
    }
    let prec = Precision { digits: precision };
    let mut r = ConstantsReport::new(family.name(), digits, precision);
    if let Some((f, unrooted)) = family.map_family() {
        let d = map_constants(f, prec)?;
        singular_entries(&mut r, &d, digits, "c");
        if unrooted {
            growth_entries(&mut r, &unrooted_constants(f, &d), digits);
        } else {
            growth_entries(&mut r, &rooted_growth(f, &d), digits);
        }
        if f == MapFamily::All {
            r.notes
                .push("base includes the factor 2^(1/2) from free crossing choices".into());
        }
        return Ok(r);
    }
    match family {
        ConstantsFamily::Knots => {
            let k = knot_asymptotics(prec);
            r.push("c", k.c.to_decimal(digits));
            r.push("beta", k.beta.to_decimal(digits));
            r.push("exponent", k.exponent.to_decimal(digits));
            for (n, ratio) in knot_ratio(&KNOT_RATIO_SIZES, prec) {
                r.push(&format!("ratio[{n}]"), ratio.to_decimal(digits));
            }
            r.notes
                .push("[z^n]K ~ c n^exponent exp(beta sqrt(n))".into());
        }
        ConstantsFamily::Lbar | ConstantsFamily::Lhat => {
            let l = link_constants(prec)?;
            let (d, name) = if family == ConstantsFamily::Lbar {
                (&l.lbar, "c1")
            } else {
                (&l.lhat, "c2")
            };
            singular_entries(&mut r, d, digits, name);
            r.push("exponent", "-2.5".into());
            r.push("series order", l.series_order.to_string());
            r.notes.push("[z^n] ~ C n^exponent rho^(-n)".into());
        }
        ConstantsFamily::L => {
            let l = link_constants(prec)?;
            let p = l.rho.prec();
            let g = gamma(&(Real::from_i64(-3, p) / Real::from_i64(2, p)));
            r.push("rho", l.rho.to_decimal(digits));
            r.push("base", (Real::one(p) / l.rho.sqrt()).to_decimal(digits));
            r.push("even", l.l_even.to_decimal(digits));
            r.push("odd", l.l_odd.to_decimal(digits));
            r.push("C even", (&l.l_even / &g).to_decimal(digits));
            r.push("C odd", (&l.l_odd / &g).to_decimal(digits));
            r.push("exponent", "-2.5".into());
            r.push("series order", l.series_order.to_string());
            r.notes.push(
                "[z^n]L ~ (c / Gamma(-3/2)) n^exponent rho^(-n/2), c = even or odd by parity of n"
                    .into(),
            );
        }
        _ => unreachable!("map families handled above"),
    }
    Ok(r)
}

/// Every reference constant recomputed, keyed by the labels of
/// [`crate::reference::CONSTANTS`].
pub fn all_reference_constants(
    precision: usize,
) -> Result<Vec<(&'static str, Real)>, AsymptoticsError> {
    let prec = Precision { digits: precision };
    let l = link_constants(prec)?;
    let k = knot_asymptotics(prec);
    let mut out = vec![
        ("links rho", l.rho.clone()),
        ("Lbar c1", l.lbar.c.clone()),
        ("Lhat c2", l.lhat.c.clone()),
        ("Lbar C", l.lbar.transfer_constant.clone()),
        ("Lhat C", l.lhat.transfer_constant.clone()),
        ("L even", l.l_even.clone()),
        ("L odd", l.l_odd.clone()),
        ("knots c", k.c),
        ("knots beta", k.beta),
    ];
    let labels = [
        (
            MapFamily::All,
            ["M rho", "M c", "unrooted M rho", "unrooted M c"],
        ),
        (
            MapFamily::Minimal,
            ["M1 rho", "M1 c", "unrooted M1 rho", "unrooted M1 c"],
        ),
        (
            MapFamily::Unknot,
            ["M2 rho", "M2 c", "unrooted M2 rho", "unrooted M2 c"],
        ),
    ];
    for (f, names) in labels {
        let d = map_constants(f, prec)?;
        let u = unrooted_constants(f, &d);
        out.push((names[0], d.rho.clone()));
        out.push((names[1], d.c.clone()));
        // the unrooted form keeps rho and c and divides by 2n
        out.push((
            names[2],
            Real::one(u.base.prec()) / &u.base * rooted_crossing(f, u.base.prec()),
        ));
        out.push((names[3], d.c.clone()));
    }
    Ok(out)
}

fn rooted_crossing(f: MapFamily, p: usize) -> Real {
    if f == MapFamily::All {
        Real::from_i64(2, p).sqrt()
    } else {
        Real::one(p)
    }
}
