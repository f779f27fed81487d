//! Enumeration engine for K4-minor-free link-diagrams and links.
//!
//! Exact counting series come from tree and map grammars over the rationals;
//! the numeric side locates dominant singularities and reads off asymptotic constants.

pub mod asymptotics;
pub mod error;
pub mod grammar;
pub mod jet;
pub mod links;
pub mod maps;
pub mod poly;
pub mod real;
pub mod report;
pub mod series;

pub use error::{AsymptoticsError, CheckError, ReportError, SeriesError};
pub use grammar::{solve_fixpoint, Assignment, GrammarSystem};
pub use report::{ConstantsReport, SeriesReport};
pub use series::TruncSeries;
