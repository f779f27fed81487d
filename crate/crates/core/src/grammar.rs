//! Systems `x_i = Phi_i(z, x)` over truncated series, solved by iteration.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::SeriesError;
use crate::series::TruncSeries;

type Rule<'a> = Box<dyn Fn(&Assignment) -> Result<TruncSeries, SeriesError> + Send + Sync + 'a>;

/// Current values of the unknowns, looked up by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    names: Vec<String>,
    values: Vec<TruncSeries>,
}

impl Assignment {
    pub fn get(&self, name: &str) -> Result<&TruncSeries, SeriesError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.values[i])
            .ok_or_else(|| SeriesError::UnknownName(name.to_string()))
    }

    /// Same as [`get`](Self::get); panics on an unknown name.
    pub fn of(&self, name: &str) -> &TruncSeries {
        self.get(name).expect("unknown name in grammar rule")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn values(&self) -> &[TruncSeries] {
        &self.values
    }

    pub fn into_map(self) -> BTreeMap<String, TruncSeries> {
        self.names.into_iter().zip(self.values).collect()
    }
}

/// A set of named unknowns with one update rule each.
///
/// Every rule must map the all-zero assignment to a series with zero constant term,
/// and must gain at least one order of `z` per application, as tree-like grammars do.
pub struct GrammarSystem<'a> {
    order: usize,
    names: Vec<String>,
    rules: Vec<Rule<'a>>,
}

impl<'a> GrammarSystem<'a> {
    pub fn new(order: usize) -> Self {
        GrammarSystem {
            order,
            names: Vec::new(),
            rules: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Adds an unknown with its update rule.
    pub fn unknown<F>(mut self, name: &str, rule: F) -> Self
    where
        F: Fn(&Assignment) -> Result<TruncSeries, SeriesError> + Send + Sync + 'a,
    {
        self.names.push(name.to_string());
        self.rules.push(Box::new(rule));
        self
    }

    /// Applies every rule once (Jacobi style).
    pub fn step(&self, current: &Assignment) -> Result<Assignment, SeriesError> {
        let values = self
            .rules
            .iter()
            .map(|r| r(current).map(|s| s.truncate(self.order)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Assignment {
            names: self.names.clone(),
            values,
        })
    }

    fn zero_assignment(&self) -> Assignment {
        Assignment {
            names: self.names.clone(),
            values: vec![TruncSeries::zero(self.order); self.names.len()],
        }
    }
}

/// Iterates from zero until a full pass changes nothing.
///
/// Each pass fixes at least one more coefficient, so more than `order + 2` passes means
/// the system is not of the expected shape.
pub fn solve_fixpoint(system: &GrammarSystem) -> Result<Assignment, SeriesError> {
    if system.rules.len() != system.names.len() {
        return Err(SeriesError::ShapeMismatch {
            names: system.names.len(),
            rules: system.rules.len(),
        });
    }
    let mut cur = system.zero_assignment();
    let first = system.step(&cur)?;
    for (name, v) in first.names.iter().zip(&first.values) {
        if !v.coeff(0).is_zero() {
            return Err(SeriesError::IllFormedRule {
                name: name.clone(),
                value: v.coeff(0).to_string(),
            });
        }
    }
    cur = first;
    let max_passes = system.order + 2;
    for _ in 0..max_passes {
        let next = system.step(&cur)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    Err(SeriesError::Divergence {
        passes: max_passes + 1,
    })
}
