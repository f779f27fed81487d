//! Machine-readable coefficient tables and constant reports.
//!
//! Exact coefficients travel as decimal strings so that no consumer has to squeeze
//! them through a float.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::ReportError;
use crate::series::TruncSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub family: String,
    pub order: usize,
    pub coefficients: Vec<String>,
}

impl SeriesReport {
    pub fn new(family: &str, coeffs: &[BigInt]) -> SeriesReport {
        SeriesReport {
            family: family.to_string(),
            order: coeffs.len().saturating_sub(1),
            coefficients: coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_series(family: &str, s: &TruncSeries) -> Result<SeriesReport, ReportError> {
        let c = s
            .to_integers()
            .map_err(|e| ReportError::Malformed(e.to_string()))?;
        Ok(SeriesReport::new(family, &c))
    }

    pub fn integers(&self) -> Result<Vec<BigInt>, ReportError> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.parse::<BigInt>().map_err(|e| ReportError::Line {
                    line: i,
                    msg: format!("{c:?}: {e}"),
                })
            })
            .collect()
    }

    /// Polynomial layout, `1 + z^2 + 2 z^3 + ...`.
    pub fn to_text(&self) -> Result<String, ReportError> {
        let c = self.integers()?;
        Ok(TruncSeries::from_bigints(&c, self.order).to_string())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<SeriesReport, ReportError> {
        let r: SeriesReport =
            serde_json::from_str(text).map_err(|e| ReportError::Malformed(e.to_string()))?;
        r.validate()?;
        Ok(r)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for (n, c) in self.coefficients.iter().enumerate() {
            w.serialize(CsvRow {
                n,
                coefficient: c.clone(),
            })
            .expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("ascii output")
    }

    /// Parses CSV with header `n,coefficient` and rows `0..=order` in order.
    pub fn from_csv(family: &str, text: &str) -> Result<SeriesReport, ReportError> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let header = r
            .headers()
            .map_err(|e| ReportError::Malformed(e.to_string()))?;
        if header != vec!["n", "coefficient"] {
            return Err(ReportError::Malformed(
                "missing header n,coefficient".into(),
            ));
        }
        let mut coefficients = Vec::new();
        for (i, row) in r.deserialize::<CsvRow>().enumerate() {
            let row = row.map_err(|e| ReportError::Line {
                line: i + 2,
                msg: e.to_string(),
            })?;
            if row.n != coefficients.len() {
                return Err(ReportError::Line {
                    line: i + 2,
                    msg: format!("index {} out of sequence", row.n),
                });
            }
            coefficients.push(row.coefficient);
        }
        if coefficients.is_empty() {
            return Err(ReportError::Malformed("no rows".into()));
        }
        let r = SeriesReport {
            family: family.to_string(),
            order: coefficients.len() - 1,
            coefficients,
        };
        r.validate()?;
        Ok(r)
    }

    fn validate(&self) -> Result<(), ReportError> {
        if self.coefficients.len() != self.order + 1 {
            return Err(ReportError::Malformed(format!(
                "order {} but {} coefficients",
                self.order,
                self.coefficients.len()
            )));
        }
        self.integers().map(|_| ())
    }
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    n: usize,
    coefficient: String,
}

/// Named real values at a stated precision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub family: String,
    pub digits: usize,
    /// Working precision in decimal digits.
    pub precision: usize,
    pub entries: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub value: String,
}

impl ConstantsReport {
    pub fn new(family: &str, digits: usize, precision: usize) -> ConstantsReport {
        ConstantsReport {
            family: family.to_string(),
            digits,
            precision,
            entries: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, name: &str, value: String) {
        self.entries.push(Entry {
            name: name.to_string(),
            value,
        });
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .map(|e| e.value.as_str())
    }

    pub fn to_text(&self) -> String {
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        let mut out = format!(
            "{} ({} digits, working precision {})\n",
            self.family, self.digits, self.precision
        );
        for e in &self.entries {
            writeln!(out, "  {:width$} = {}", e.name, e.value).expect("writing to a string");
        }
        for n in &self.notes {
            writeln!(out, "  note: {n}").expect("writing to a string");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<ConstantsReport, ReportError> {
        serde_json::from_str(text).map_err(|e| ReportError::Malformed(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for e in &self.entries {
            w.serialize(e).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 output")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SeriesReport {
        SeriesReport::new("K", &[1, 0, 0, 2, 0, 2].map(BigInt::from))
    }

    #[test]
    fn csv_and_json_roundtrip() {
        let r = sample();
        assert_eq!(SeriesReport::from_csv("K", &r.to_csv()).unwrap(), r);
        assert_eq!(SeriesReport::from_json(&r.to_json()).unwrap(), r);
        assert!(r.to_csv().ends_with("5,2\n"));
        assert_eq!(r.to_text().unwrap(), "1 + 2 z^3 + 2 z^5");
    }

    #[test]
    fn big_values_stay_exact() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let r = SeriesReport::new("X", std::slice::from_ref(&big));
        assert_eq!(
            SeriesReport::from_json(&r.to_json())
                .unwrap()
                .integers()
                .unwrap(),
            vec![big]
        );
    }

    #[test]
    fn malformed_input() {
        assert!(SeriesReport::from_csv("K", "").is_err());
        assert!(SeriesReport::from_csv("K", "n,coefficient\n1,3\n").is_err());
        assert!(SeriesReport::from_csv("K", "n,coefficient\n0,x\n").is_err());
        assert!(
            SeriesReport::from_json(r#"{"family":"K","order":2,"coefficients":["1"]}"#).is_err()
        );
        assert!(
            SeriesReport::from_json(r#"{"family":"K","order":0,"coefficients":["1.5"]}"#).is_err()
        );
    }

    #[test]
    fn constants_roundtrip() {
        let mut c = ConstantsReport::new("Lbar", 10, 60);
        c.push("rho", "0.4407408680".into());
        c.notes.push("even and odd n".into());
        assert_eq!(ConstantsReport::from_json(&c.to_json()).unwrap(), c);
        assert!(c.to_text().contains("rho = 0.4407408680"));
        assert_eq!(c.get("rho"), Some("0.4407408680"));
    }
}
