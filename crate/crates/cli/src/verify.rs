//! Verification suites: each returns one [`Check`] per comparison.

use std::fmt;

use clap::ValueEnum;
use k4links_core::links::{build_lbar, build_tpointed, check_partition_identity};
use k4links_core::maps::{check_elimination, solve, MapFamily};
use k4links_oracle::{count_diagrams, count_trees};
use num_bigint::BigInt;
use serde::Serialize;

use crate::reference;
use crate::series::SeriesFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    PrintedSeries,
    Polynomials,
    Oracle,
    Trees,
    Partitions,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Truncation order for the elimination identities.
    pub poly_order: usize,
    pub partition_order: usize,
    pub max_vertices: usize,
    pub max_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            poly_order: 64,
            partition_order: 500,
            max_vertices: 4,
            max_size: 12,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub scope: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{}] {}", self.scope, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn check(scope: &'static str, name: impl Into<String>, result: Result<String, String>) -> Check {
    match result {
        Ok(detail) => Check {
            scope,
            name: name.into(),
            passed: true,
            detail,
        },
        Err(detail) => Check {
            scope,
            name: name.into(),
            passed: false,
            detail,
        },
    }
}

/// First index where the two tables differ, formatted for a report.
pub fn compare<A: PartialEq<B> + fmt::Display, B: fmt::Display>(
    expected: &[A],
    actual: &[B],
) -> Result<String, String> {
    for (i, (e, a)) in expected.iter().zip(actual).enumerate() {
        if e != a {
            return Err(format!("first mismatch at n = {i}: expected {e}, got {a}"));
        }
    }
    if actual.len() < expected.len() {
        return Err(format!(
            "only {} of {} coefficients computed",
            actual.len(),
            expected.len()
        ));
    }
    Ok(format!("{} coefficients agree", expected.len()))
}

pub fn reference_series() -> Vec<Check> {
    let cases: [(SeriesFamily, Vec<i64>); 7] = [
        (SeriesFamily::K, reference::K.to_vec()),
        (SeriesFamily::Lbar, reference::LBAR.to_vec()),
        (SeriesFamily::Lhat, reference::LHAT.to_vec()),
        (SeriesFamily::L, reference::L.to_vec()),
        (
            SeriesFamily::Mplus,
            reference::spread_even(reference::MPLUS_EVEN),
        ),
        (
            SeriesFamily::M1plus,
            reference::spread_even(reference::M1PLUS_EVEN),
        ),
        (
            SeriesFamily::M2plus,
            reference::spread_even(reference::M2PLUS_EVEN),
        ),
    ];
    cases
        .into_iter()
        .map(|(f, want)| {
            let result = f
                .build(want.len() - 1)
                .map_err(|e| e.to_string())
                .and_then(|s| {
                    let got = s.to_integers().map_err(|e| e.to_string())?;
                    let want: Vec<BigInt> = want.iter().map(|&x| BigInt::from(x)).collect();
                    compare(&want, &got)
                });
            check(
                "printed-series",
                format!("{} through z^{}", f.name(), want.len() - 1),
                result,
            )
        })
        .collect()
}

pub fn polynomials(order: usize) -> Vec<Check> {
    MapFamily::ALL
        .into_iter()
        .map(|f| {
            let result = solve(f, order)
                .map_err(|e| e.to_string())
                .and_then(|s| check_elimination(&s).map_err(|e| e.to_string()))
                .map(|_| format!("vanishes mod z^{}", order + 1));
            check("polynomials", format!("p_{f}"), result)
        })
        .collect()
}

pub fn partitions(order: usize) -> Vec<Check> {
    let result = check_partition_identity(order)
        .map(|_| format!("agree through z^{order}"))
        .map_err(|e| e.to_string());
    vec![check("partitions", "(1-z)^2 prod (1+z^n)^2 = K", result)]
}

/// Brute-force diagram counts for `1..=max_vertices` against the three diagram series.
pub fn oracle(max_vertices: usize) -> Vec<Check> {
    let order = 2 * max_vertices;
    let series: Vec<Result<Vec<BigInt>, String>> = [
        SeriesFamily::Mplus,
        SeriesFamily::M1plus,
        SeriesFamily::M2plus,
    ]
    .into_iter()
    .map(|f| {
        f.build(order)
            .and_then(|s| s.to_integers())
            .map_err(|e| e.to_string())
    })
    .collect();
    let counts: Vec<_> = (1..=max_vertices).map(count_diagrams).collect();
    let names = [
        "rooted diagrams vs Mplus",
        "minimal diagrams vs M1plus",
        "unknot diagrams vs M2plus",
    ];
    names
        .iter()
        .enumerate()
        .map(|(k, name)| {
            let result = series[k].clone().and_then(|s| {
                let want: Vec<BigInt> = (1..=max_vertices).map(|v| s[2 * v].clone()).collect();
                let got: Vec<u64> = counts
                    .iter()
                    .map(|c| [c.diagrams, c.minimal, c.unknot][k])
                    .collect();
                let got: Vec<BigInt> = got.into_iter().map(BigInt::from).collect();
                compare(&want, &got).map(|_| format!("v = 1..={max_vertices}: {}", join(&got)))
            });
            check("oracle", *name, result)
        })
        .collect()
}

/// Tree counts for sizes `2..=max_size` against `Lbar` (unrooted) and `F/E` (vertex-rooted).
pub fn trees(max_size: usize) -> Vec<Check> {
    let sizes: Vec<usize> = (2..=max_size).collect();
    let counts: Vec<_> = sizes.iter().map(|&n| count_trees(n)).collect();
    let mut out = Vec::new();
    for (name, build, pick) in [
        (
            "unrooted trees vs Lbar",
            build_lbar as fn(usize) -> _,
            0usize,
        ),
        ("vertex-rooted trees vs F/E", build_tpointed, 1),
    ] {
        let result = build(max_size)
            .and_then(|s| s.to_integers())
            .map_err(|e| e.to_string())
            .and_then(|s| {
                let want: Vec<BigInt> = sizes.iter().map(|&n| s[n].clone()).collect();
                let got: Vec<BigInt> = counts
                    .iter()
                    .map(|c| {
                        BigInt::from(if pick == 0 {
                            c.unrooted
                        } else {
                            c.vertex_rooted
                        })
                    })
                    .collect();
                compare(&want, &got).map(|_| format!("n = 2..={max_size}: {}", join(&got)))
            });
        out.push(check("trees", name, result));
    }
    out
}

fn join(v: &[BigInt]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn run(scope: Scope, limits: Limits) -> Vec<Check> {
    match scope {
        Scope::PrintedSeries => reference_series(),
        Scope::Polynomials => polynomials(limits.poly_order),
        Scope::Oracle => oracle(limits.max_vertices),
        Scope::Trees => trees(limits.max_size),
        Scope::Partitions => partitions(limits.partition_order),
        Scope::All => [
            Scope::PrintedSeries,
            Scope::Polynomials,
            Scope::Partitions,
            Scope::Oracle,
            Scope::Trees,
        ]
        .into_iter()
        .flat_map(|s| run(s, limits))
        .collect(),
    }
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    kind: &'static str,
    passed: bool,
    checks: &'a [Check],
}

pub fn to_json(checks: &[Check]) -> String {
    let r = VerifyReport {
        kind: "verification",
        passed: checks.iter().all(|c| c.passed),
        checks,
    };
    serde_json::to_string_pretty(&r).expect("plain struct serializes") + "\n"
}
