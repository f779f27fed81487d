//! Sparse integer polynomials evaluated over any commutative ring of series or jets.

use std::fmt;

use crate::series::TruncSeries;

/// The operations polynomial evaluation needs.
pub trait Ring: Clone {
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn add_r(&self, other: &Self) -> Self;
    fn mul_r(&self, other: &Self) -> Self;
    fn scale_i(&self, c: i64) -> Self;
}

impl Ring for TruncSeries {
    fn one_like(&self) -> Self {
        TruncSeries::one(self.order())
    }
    fn zero_like(&self) -> Self {
        TruncSeries::zero(self.order())
    }
    fn add_r(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_r(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_i(&self, c: i64) -> Self {
        self.scale_int(c)
    }
}

/// `sum c * x_0^e_0 * ... * x_k^e_k` in a fixed list of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<&'static str>,
    terms: Vec<(i64, Vec<u32>)>,
}

impl Polynomial {
    pub fn new(vars: &[&'static str], terms: &[(i64, &[u32])]) -> Self {
        for (_, e) in terms {
            assert_eq!(
                e.len(),
                vars.len(),
                "exponent vector length must match variable count"
            );
        }
        Polynomial {
            vars: vars.to_vec(),
            terms: terms.iter().map(|(c, e)| (*c, e.to_vec())).collect(),
        }
    }

    pub fn vars(&self) -> &[&'static str] {
        &self.vars
    }

    pub fn terms(&self) -> &[(i64, Vec<u32>)] {
        &self.terms
    }

    pub fn eval<R: Ring>(&self, values: &[R]) -> R {
        assert_eq!(values.len(), self.vars.len());
        let maxe: Vec<u32> = (0..self.vars.len())
            .map(|i| self.terms.iter().map(|(_, e)| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<R>> = values
            .iter()
            .zip(&maxe)
            .map(|(v, &m)| {
                let mut p = vec![v.one_like()];
                for k in 1..=m as usize {
                    let next = p[k - 1].mul_r(v);
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = values[0].zero_like();
        for (c, e) in &self.terms {
            let mut t = values[0].one_like().scale_i(*c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul_r(&powers[i][k as usize]);
                }
            }
            acc = acc.add_r(&t);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, e)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {} ", sign)?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if c.abs() != 1 || e.iter().all(|&k| k == 0) {
                parts.push(c.abs().to_string());
            }
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{}^{}", v, k)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
