//! Dominant singularities and transfer constants.
//!
//! Every family here has a square-root branch point `rho`, so its counting series
//! expands as `f_0 + f_1 Z + f_2 Z^2 + ...` in `Z = sqrt(1 - z/rho)` and coefficients
//! behave like `c / Gamma(-alpha) n^(-alpha-1) rho^(-n)` with `c` the first odd term.

mod gamma;
mod knots;
mod links;
mod maps;
mod singular;

pub use gamma::{bernoulli, gamma};
pub use knots::{knot_asymptotics, knot_coefficients, knot_ratio, KnotAsymptotics};
pub use links::{link_constants, LinkConstants};
pub use maps::{
    map_constants, map_defining, rooted_growth, unknot_tr_closed_form, unrooted_constants,
};
pub use singular::{branch_point, local_expansion, square_root_branch, Defining};

use crate::real::{bits_for_digits, Real};

/// Numeric settings shared by all constant computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    /// Working precision in decimal digits.
    pub digits: usize,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { digits: 60 }
    }
}

impl Precision {
    pub fn bits(&self) -> usize {
        bits_for_digits(self.digits)
    }

    /// Newton tolerance, ten digits short of the working precision.
    pub fn tolerance(&self) -> Real {
        let p = self.bits();
        Real::from_i64(10, p).powi(-(self.digits as i64 - 10))
    }
}

/// Singular data of one counting series.
#[derive(Clone, Debug)]
pub struct SingularData {
    pub family: String,
    pub rho: Real,
    /// Value of the implicitly defined unknown at `rho`.
    pub y_at_rho: Real,
    /// Exponent of the leading singular term: `1/2` or `3/2`.
    pub alpha: Real,
    /// Coefficients in `Z = sqrt(1 - z/rho)` of the counting series.
    pub expansion: Vec<Real>,
    /// Leading singular coefficient, summed over conjugate singularities when periodic.
    pub c: Real,
    /// `c / Gamma(-alpha)`.
    pub transfer_constant: Real,
    /// Residual `|Phi| + |Phi_y|` at the computed point.
    pub residual: Real,
}

impl SingularData {
    /// Predicted `n`-th coefficient `C n^(-alpha-1) base^n`, with `base` the growth rate.
    pub fn predicted(&self, n: usize, base: &Real) -> Real {
        let p = self.rho.prec();
        let nn = Real::from_i64(n as i64, p);
        let e = -(&self.alpha + &Real::one(p));
        &self.transfer_constant * &nn.powf(&e) * base.powi(n as i64)
    }
}

/// `[z^n] f ~ prefactor * n^exponent * base^n`, on the residues `n = offset mod period`.
#[derive(Clone, Debug)]
pub struct GrowthDescription {
    pub family: String,
    pub prefactor: Real,
    pub exponent: Real,
    pub base: Real,
    pub period: usize,
    pub offset: usize,
    pub note: String,
}

impl GrowthDescription {
    pub fn predict(&self, n: usize) -> Real {
        let p = self.base.prec();
        let nn = Real::from_i64(n as i64, p);
        &self.prefactor * &nn.powf(&self.exponent) * self.base.powi(n as i64)
    }
}
