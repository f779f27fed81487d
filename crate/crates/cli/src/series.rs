//! Coefficient tables for every exposed series.

use clap::ValueEnum;
use k4links_core::links::{build_e, build_k, build_kbar, build_l, build_lbar, build_lhat};
use k4links_core::maps::{build_tr, solve, MapFamily};
use k4links_core::{ReportError, SeriesError, SeriesReport, TruncSeries};

use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesFamily {
    #[value(name = "K")]
    K,
    #[value(name = "Lbar")]
    Lbar,
    #[value(name = "Lhat")]
    Lhat,
    #[value(name = "L")]
    L,
    #[value(name = "Mplus")]
    Mplus,
    #[value(name = "M1plus")]
    M1plus,
    #[value(name = "M2plus")]
    M2plus,
    #[value(name = "E")]
    E,
    #[value(name = "Kbar")]
    Kbar,
    #[value(name = "T1")]
    T1,
    #[value(name = "T3")]
    T3,
}

impl SeriesFamily {
    pub fn name(self) -> &'static str {
        match self {
            SeriesFamily::K => "K",
            SeriesFamily::Lbar => "Lbar",
            SeriesFamily::Lhat => "Lhat",
            SeriesFamily::L => "L",
            SeriesFamily::Mplus => "Mplus",
            SeriesFamily::M1plus => "M1plus",
            SeriesFamily::M2plus => "M2plus",
            SeriesFamily::E => "E",
            SeriesFamily::Kbar => "Kbar",
            SeriesFamily::T1 => "T1",
            SeriesFamily::T3 => "T3",
        }
    }

    pub fn build(self, order: usize) -> Result<TruncSeries, SeriesError> {
        let plus = |f: MapFamily| -> Result<TruncSeries, SeriesError> {
            Ok(solve(f, order.max(1))?.plus.truncate(order))
        };
        match self {
            SeriesFamily::K => build_k(order),
            SeriesFamily::Lbar => build_lbar(order),
            SeriesFamily::Lhat => build_lhat(order),
            SeriesFamily::L => build_l(order),
            SeriesFamily::Mplus => plus(MapFamily::All),
            SeriesFamily::M1plus => plus(MapFamily::Minimal),
            SeriesFamily::M2plus => plus(MapFamily::Unknot),
            SeriesFamily::E => Ok(build_e(order)),
            SeriesFamily::Kbar => Ok(build_kbar(order)),
            SeriesFamily::T1 => Ok(build_tr(1, order)),
            SeriesFamily::T3 => Ok(build_tr(3, order)),
        }
    }

    pub fn report(self, order: usize) -> Result<SeriesReport, ReportError> {
        let s = self
            .build(order)
            .map_err(|e| ReportError::Malformed(e.to_string()))?;
        SeriesReport::from_series(self.name(), &s)
    }
}

pub fn render(report: &SeriesReport, format: Format) -> Result<String, ReportError> {
    Ok(match format {
        Format::Text => report.to_text()? + "\n",
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_match_the_command_line() {
        assert_eq!(SeriesFamily::M2plus.name(), "M2plus");
        assert_eq!(SeriesFamily::Lbar.name(), "Lbar");
    }

    #[test]
    fn order_zero() {
        assert_eq!(SeriesFamily::K.report(0).unwrap().to_text().unwrap(), "1");
        assert_eq!(
            SeriesFamily::Mplus.report(0).unwrap().to_text().unwrap(),
            "0"
        );
    }
}
