//! Rooted K4-minor-free 4-regular planar maps and the link-diagrams built on them.
//!
//! In all three grammars `z` marks non-root edges; the `plus` series re-index by
//! vertices (or crossings) so that they count diagrams directly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{CheckError, SeriesError};
use crate::grammar::{solve_fixpoint, Assignment, GrammarSystem};
use crate::poly::Polynomial;
use crate::series::TruncSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapFamily {
    /// All rooted maps, crossings chosen freely.
    All,
    /// Diagrams with the minimal number of crossings for their link.
    Minimal,
    /// Diagrams of the unknot.
    Unknot,
}

impl MapFamily {
    pub const ALL: [MapFamily; 3] = [MapFamily::All, MapFamily::Minimal, MapFamily::Unknot];

    pub fn name(self) -> &'static str {
        match self {
            MapFamily::All => "M",
            MapFamily::Minimal => "M1",
            MapFamily::Unknot => "M2",
        }
    }
}

impl fmt::Display for MapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "M" | "all" => Ok(MapFamily::All),
            "M1" | "minimal" => Ok(MapFamily::Minimal),
            "M2" | "unknot" => Ok(MapFamily::Unknot),
            _ => Err(format!("unknown map family {s}")),
        }
    }
}

/// Solved grammar: the total series `M`, every unknown, and the re-indexed `plus` series.
#[derive(Clone, Debug)]
pub struct MapGrammarSolution {
    pub family: MapFamily,
    /// Edge-counting series, exact to `order`.
    pub m: TruncSeries,
    pub unknowns: Assignment,
    /// Diagram-counting series, exact to `order + 1`.
    pub plus: TruncSeries,
}

fn w_sq(z: &TruncSeries, m: &TruncSeries) -> TruncSeries {
    let w = z + &(&z.shift(1) * m);
    &w * &w
}

/// `T_r(x) = sum_n C(2n+r, n) x^(r+2n)`.
pub fn build_tr(r: usize, order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    let mut k = r;
    let mut n = 0u64;
    while k <= order {
        let c = binomial(BigInt::from(2 * n + r as u64), BigInt::from(n));
        s.set_coeff(k, BigRational::from_integer(c));
        k += 2;
        n += 1;
    }
    s
}

fn sum4(a: &Assignment) -> TruncSeries {
    &(a.of("Mpp") + a.of("Mpm")) + &(a.of("Mmp") + a.of("Mmm"))
}

/// `M = U + S + P + F` with all crossings free; `plus[n] = 2^(n/2) [z^(n-1)] M`.
pub fn solve_all(order: usize) -> Result<MapGrammarSolution, SeriesError> {
    let z = TruncSeries::var(order);
    let (z1, z4) = (z.clone(), z);
    let sys = GrammarSystem::new(order)
        .unknown("M", |a| {
            Ok(&(a.of("U") + a.of("S")) + &(a.of("P") + a.of("F")))
        })
        .unknown("U", move |a| {
            Ok(&(a.of("M").shift(2)).scale_int(2) + &z1.scale_int(2))
        })
        .unknown("S", |a| {
            let m = a.of("M");
            Ok((&(m - a.of("S")) * m).shift(1))
        })
        .unknown("P", move |a| {
            let m = a.of("M");
            let t = &TruncSeries::one(order) + &m.shift(1);
            let t3 = &(&t * &t) * &t;
            Ok(&t3.shift(3) + &(a.of("F") * m).shift(1))
        })
        .unknown("F", move |a| {
            let w2 = w_sq(&z4, a.of("M"));
            Ok(&w2 * &(a.of("F") + &w2.shift(1).scale_int(2)))
        });
    let sol = solve_fixpoint(&sys)?;
    let m = sol.of("M").clone();
    let mut plus = TruncSeries::zero(order + 1);
    for n in (2..=order + 1).step_by(2) {
        let c = m.coeff(n - 1) * BigRational::from_integer(BigInt::from(2).pow((n / 2) as u32));
        plus.set_coeff(n, c);
    }
    Ok(MapGrammarSolution {
        family: MapFamily::All,
        m,
        unknowns: sol,
        plus,
    })
}

// S rules shared by the minimal and unknot systems; sub/sup index order follows the names.
fn s_rule(a: &Assignment, left: [&str; 2], right: [&str; 4]) -> TruncSeries {
    let l = a.of(left[0]) + a.of(left[1]);
    let r = &(a.of(right[0]) + a.of(right[1])) - &(a.of(right[2]) + a.of(right[3]));
    (&l * &r).shift(1)
}

fn add_s_rules<'a>(sys: GrammarSystem<'a>) -> GrammarSystem<'a> {
    sys.unknown("Spp", |a| {
        Ok(s_rule(a, ["Mmp", "Mpp"], ["Mpp", "Mpm", "Spp", "Spm"]))
    })
    .unknown("Smm", |a| {
        Ok(s_rule(a, ["Mmm", "Mpm"], ["Mmm", "Mmp", "Smm", "Smp"]))
    })
    .unknown("Smp", |a| {
        Ok(s_rule(a, ["Mpp", "Mmp"], ["Mmm", "Mmp", "Smm", "Smp"]))
    })
    .unknown("Spm", |a| {
        Ok(s_rule(a, ["Mmm", "Mpm"], ["Mpp", "Mpm", "Spp", "Spm"]))
    })
}

/// Minimal diagrams, split by the sign pattern at the root; `plus = z M1`.
pub fn solve_minimal(order: usize) -> Result<MapGrammarSolution, SeriesError> {
    let one = TruncSeries::one(order);
    let z = TruncSeries::var(order);
    let p_rule = move |a: &Assignment, fname: &str| {
        let m = sum4(a);
        let t = &one + &m.shift(1);
        let t3 = &(&t * &t) * &t;
        &t3.shift(3) + &(a.of(fname) * &m).shift(1)
    };
    let p1 = p_rule.clone();
    let f_rule = move |a: &Assignment, fname: &str| {
        let w2 = w_sq(&z, &sum4(a));
        &w2 * &(a.of(fname) + &w2.shift(1).scale_int(2))
    };
    let f1 = f_rule.clone();
    let sys = GrammarSystem::new(order)
        .unknown("Mmp", |a| Ok(&(a.of("Smp") + a.of("Pmp")) + a.of("Fmp")))
        .unknown("Mpm", |a| Ok(&(a.of("Spm") + a.of("Ppm")) + a.of("Fpm")))
        .unknown("Mpp", |a| Ok(a.of("Spp").clone()))
        .unknown("Mmm", |a| Ok(a.of("Smm").clone()))
        .unknown("Pmp", move |a| Ok(p_rule(a, "Fmp")))
        .unknown("Ppm", move |a| Ok(p1(a, "Fpm")))
        .unknown("Fmp", move |a| Ok(f_rule(a, "Fmp")))
        .unknown("Fpm", move |a| Ok(f1(a, "Fpm")));
    let sol = solve_fixpoint(&add_s_rules(sys))?;
    let m = sum4(&sol);
    let plus = TruncSeries::from_coeffs(m.coeffs().to_vec(), order + 1).shift(1);
    Ok(MapGrammarSolution {
        family: MapFamily::Minimal,
        m,
        unknowns: sol,
        plus,
    })
}

/// Unknot diagrams; the chain blocks are counted by `T_1`, `T_3` so their signs sum to +-1.
pub fn solve_unknot(order: usize) -> Result<MapGrammarSolution, SeriesError> {
    let z = TruncSeries::var(order);
    let t1 = build_tr(1, order);
    let t3 = build_tr(3, order);
    let t13 = &t1 + &t3;
    let zu = z.clone();
    let u_rule = move |a: &Assignment| &zu.scale_int(2) + &sum4(a).shift(2).scale_int(2);
    let u2 = u_rule.clone();
    let zf = z.clone();
    let f_mixed = move |a: &Assignment| -> Result<TruncSeries, SeriesError> {
        let w2 = w_sq(&zf, &sum4(a));
        Ok((&w2 * &TruncSeries::compose(&t1, &w2)?)
            .shift(1)
            .scale_int(4))
    };
    let f_mixed2 = f_mixed.clone();
    let f_same = move |a: &Assignment| -> Result<TruncSeries, SeriesError> {
        let w2 = w_sq(&z, &sum4(a));
        Ok((&w2 * &TruncSeries::compose(&t13, &w2)?)
            .shift(1)
            .scale_int(2))
    };
    let f_same2 = f_same.clone();
    let p = |a: &Assignment, f: &str| (a.of(f) * &sum4(a)).shift(1);
    let sys = GrammarSystem::new(order)
        .unknown("Up", move |a| Ok(u_rule(a)))
        .unknown("Um", move |a| Ok(u2(a)))
        .unknown("Mpp", |a| Ok(&(a.of("Spp") + a.of("Ppp")) + a.of("Fpp")))
        .unknown("Mmp", |a| {
            Ok(&(&(a.of("Smp") + a.of("Pmp")) + a.of("Fmp")) + a.of("Up"))
        })
        .unknown("Mpm", |a| {
            Ok(&(&(a.of("Spm") + a.of("Ppm")) + a.of("Fpm")) + a.of("Um"))
        })
        .unknown("Mmm", |a| Ok(&(a.of("Smm") + a.of("Pmm")) + a.of("Fmm")))
        .unknown("Ppp", move |a| Ok(p(a, "Fpp")))
        .unknown("Pmp", move |a| Ok(p(a, "Fmp")))
        .unknown("Ppm", move |a| Ok(p(a, "Fpm")))
        .unknown("Pmm", move |a| Ok(p(a, "Fmm")))
        .unknown("Fmp", f_mixed)
        .unknown("Fpm", f_mixed2)
        .unknown("Fpp", f_same)
        .unknown("Fmm", f_same2);
    let sol = solve_fixpoint(&add_s_rules(sys))?;
    let m = sum4(&sol);
    let plus = TruncSeries::from_coeffs(m.coeffs().to_vec(), order + 1).shift(1);
    Ok(MapGrammarSolution {
        family: MapFamily::Unknot,
        m,
        unknowns: sol,
        plus,
    })
}

pub fn solve(family: MapFamily, order: usize) -> Result<MapGrammarSolution, SeriesError> {
    match family {
        MapFamily::All => solve_all(order),
        MapFamily::Minimal => solve_minimal(order),
        MapFamily::Unknot => solve_unknot(order),
    }
}

/// Polynomial `p(z, y)` (with `t1`, `t3` for the unknot family) vanishing on `y = M(z)`.
///
/// For the unknot family `t_r` stands for `T_r((z + z^2 y)^2)`.
pub fn elimination_polynomial(family: MapFamily) -> Polynomial {
    match family {
        MapFamily::All => Polynomial::new(
            &["z", "y"],
            &[
                (1, &[11, 6]),
                (6, &[10, 5]),
                (15, &[9, 4]),
                (-1, &[7, 4]),
                (20, &[8, 3]),
                (-4, &[6, 3]),
                (15, &[7, 2]),
                (1, &[4, 3]),
                (-6, &[5, 2]),
                (6, &[6, 1]),
                (4, &[3, 2]),
                (-4, &[4, 1]),
                (1, &[5, 0]),
                (5, &[2, 1]),
                (-1, &[3, 0]),
                (-1, &[0, 1]),
                (2, &[1, 0]),
            ],
        ),
        MapFamily::Minimal => Polynomial::new(
            &["z", "y"],
            &[
                (2, &[11, 6]),
                (12, &[10, 5]),
                (30, &[9, 4]),
                (2, &[7, 4]),
                (40, &[8, 3]),
                (8, &[6, 3]),
                (30, &[7, 2]),
                (1, &[4, 3]),
                (12, &[5, 2]),
                (12, &[6, 1]),
                (2, &[3, 2]),
                (8, &[4, 1]),
                (2, &[5, 0]),
                (1, &[2, 1]),
                (2, &[3, 0]),
                (-1, &[0, 1]),
            ],
        ),
        // 4z(1+zy)^2 + 4z^3(1+zy)^4 (3 t1 + t3) - y, expanded
        MapFamily::Unknot => Polynomial::new(
            &["z", "y", "t1", "t3"],
            &[
                (12, &[7, 4, 1, 0]),
                (4, &[7, 4, 0, 1]),
                (48, &[6, 3, 1, 0]),
                (16, &[6, 3, 0, 1]),
                (72, &[5, 2, 1, 0]),
                (24, &[5, 2, 0, 1]),
                (48, &[4, 1, 1, 0]),
                (16, &[4, 1, 0, 1]),
                (4, &[3, 2, 0, 0]),
                (12, &[3, 0, 1, 0]),
                (4, &[3, 0, 0, 1]),
                (8, &[2, 1, 0, 0]),
                (-1, &[0, 1, 0, 0]),
                (4, &[1, 0, 0, 0]),
            ],
        ),
    }
}

/// Substitutes the solved series into the elimination polynomial; must vanish to `order`.
pub fn check_elimination(sol: &MapGrammarSolution) -> Result<(), CheckError> {
    let p = elimination_polynomial(sol.family);
    let n = sol.m.order();
    let z = TruncSeries::var(n);
    let r = match sol.family {
        MapFamily::All | MapFamily::Minimal => p.eval(&[z, sol.m.clone()]),
        MapFamily::Unknot => {
            let w2 = w_sq(&z, &sol.m);
            let t1 = TruncSeries::compose(&build_tr(1, n), &w2)?;
            let t3 = TruncSeries::compose(&build_tr(3, n), &w2)?;
            p.eval(&[z, sol.m.clone(), t1, t3])
        }
    };
    match r.valuation() {
        None => Ok(()),
        Some(i) => Err(CheckError::Mismatch {
            what: format!("p_{}(z, {}(z))", sol.family, sol.family),
            index: i,
            expected: "0".into(),
            actual: r.coeff(i).to_string(),
        }),
    }
}

/// Coefficients of the `plus` series as integers, skipping the check on zero entries.
pub fn plus_counts(sol: &MapGrammarSolution) -> Result<Vec<BigInt>, SeriesError> {
    let v = sol.plus.to_counts()?;
    debug_assert!(v[0].is_zero());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn tr_coefficients() {
        assert_eq!(ints(&build_tr(1, 7)), vec![0, 1, 0, 3, 0, 10, 0, 35]);
        assert_eq!(ints(&build_tr(3, 7)), vec![0, 0, 0, 1, 0, 5, 0, 21]);
    }

    #[test]
    fn small_families() {
        assert_eq!(
            ints(&solve_all(7).unwrap().m),
            vec![0, 2, 0, 9, 0, 54, 0, 374]
        );
        assert_eq!(
            ints(&solve_minimal(7).unwrap().m),
            vec![0, 0, 0, 2, 0, 4, 0, 20]
        );
        assert_eq!(ints(&solve_unknot(5).unwrap().m), vec![0, 4, 0, 32, 0, 332]);
    }

    #[test]
    fn plus_reindexing() {
        let s = solve_all(5).unwrap();
        assert_eq!(ints(&s.plus), vec![0, 0, 4, 0, 36, 0, 432]);
    }

    #[test]
    fn elimination_holds() {
        for f in MapFamily::ALL {
            check_elimination(&solve(f, 20).unwrap()).unwrap();
        }
    }

    #[test]
    fn misweighted_unknot_terms_do_not_vanish() {
        // the form with 48 y^4 t1 + 16 y^4 t3 + 8 y^2 in place of the z-weighted terms
        let bad = Polynomial::new(
            &["z", "y", "t1", "t3"],
            &[
                (12, &[7, 4, 1, 0]),
                (4, &[7, 4, 0, 1]),
                (48, &[6, 3, 1, 0]),
                (16, &[6, 3, 0, 1]),
                (72, &[5, 2, 1, 0]),
                (24, &[5, 2, 0, 1]),
                (48, &[0, 4, 1, 0]),
                (16, &[0, 4, 0, 1]),
                (4, &[3, 2, 0, 0]),
                (12, &[3, 0, 1, 0]),
                (4, &[3, 0, 0, 1]),
                (8, &[0, 2, 0, 0]),
                (-1, &[0, 1, 0, 0]),
                (4, &[1, 0, 0, 0]),
            ],
        );
        let sol = solve_unknot(12).unwrap();
        let z = TruncSeries::var(12);
        let w2 = w_sq(&z, &sol.m);
        let t1 = TruncSeries::compose(&build_tr(1, 12), &w2).unwrap();
        let t3 = TruncSeries::compose(&build_tr(3, 12), &w2).unwrap();
        assert!(!bad.eval(&[z, sol.m.clone(), t1, t3]).is_zero());
    }
}
