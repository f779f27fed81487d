//! Brute-force enumeration of small link diagrams and labelled trees.

pub mod bracket;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod factor;
pub mod graph;
pub mod map;
pub mod trees;

pub use count::{count_diagrams, symmetry_report, DiagramCounts, SymmetryReport};
pub use error::OracleError;
pub use factor::{factorize, is_minimal, is_unknot, TorusFactorization};
pub use map::RotationMap;
pub use trees::{count_trees, enumerate_t_trees, TreeCounts};
