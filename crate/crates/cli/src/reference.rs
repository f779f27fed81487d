//! Reference tables the verification suites compare against.

/// Leading coefficients, from `z^0` on.
pub const K: &[i64] = &[1, 0, 0, 2, 0, 2, 3, 2, 4, 6, 7, 8, 13, 14, 19, 26];
pub const LBAR: &[i64] = &[1, 0, 1, 2, 3, 4, 9, 12, 26, 40, 82, 136, 280];
pub const LHAT: &[i64] = &[1, 0, 1, 2, 4, 6, 16, 24, 56, 98, 208, 382, 805];
pub const L: &[i64] = &[0, 1, 1, 1, 2, 2, 4, 4, 8, 8, 14, 14, 30, 30];
/// Diagram series: only even powers are nonzero; these are `[z^2], [z^4], ...`.
pub const MPLUS_EVEN: &[i64] = &[4, 36, 432, 5984, 90112, 1432576, 23656960];
pub const M1PLUS_EVEN: &[i64] = &[0, 2, 4, 20, 84, 372, 1796, 8516, 42340, 211332];
pub const M2PLUS_EVEN: &[i64] = &[4, 32, 332, 3968, 51688, 712416, 10214604, 150776064];

/// Expands an even-only table to all coefficients `z^0 ..= z^(2 len)`.
pub fn spread_even(even: &[i64]) -> Vec<i64> {
    let mut out = vec![0; 2 * even.len() + 1];
    for (i, &c) in even.iter().enumerate() {
        out[2 * i + 2] = c;
    }
    out
}

/// Published constants, five decimals each.
#[derive(Clone, Copy, Debug)]
pub struct RefConstant {
    pub label: &'static str,
    pub value: f64,
}

const fn rc(label: &'static str, value: f64) -> RefConstant {
    RefConstant { label, value }
}

pub const CONSTANTS: &[RefConstant] = &[
    rc("links rho", 0.44074),
    rc("Lbar c1", 23.46469),
    rc("Lhat c2", 58.99565),
    rc("Lbar C", 9.92890),
    rc("Lhat C", 24.96355),
    rc("L even", 594.24035),
    rc("L odd", 394.50617),
    rc("knots c", 0.26275),
    rc("knots beta", 2.56509),
    rc("M rho", 0.31184),
    rc("M c", -3.04531),
    rc("M1 rho", 0.41456),
    rc("M1 c", -1.62846),
    rc("M2 rho", 0.23626),
    rc("M2 c", -3.39943),
    rc("unrooted M rho", 0.31184),
    rc("unrooted M c", -3.04531),
    rc("unrooted M1 rho", 0.41456),
    rc("unrooted M1 c", -1.62846),
    rc("unrooted M2 rho", 0.23626),
    rc("unrooted M2 c", -3.39943),
];
