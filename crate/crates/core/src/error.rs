use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("constant term must be zero")]
    NonzeroConstant,
    #[error("divisor has no invertible leading term")]
    NonInvertible,
    #[error("coefficient {index} is not an integer: {value}")]
    NonIntegral { index: usize, value: String },
    #[error("coefficient {index} is negative: {value}")]
    Negative { index: usize, value: String },
    #[error(
        "rule for {name} does not raise valuation: constant term {value} at the zero assignment"
    )]
    IllFormedRule { name: String, value: String },
    #[error("fixpoint iteration did not stabilise after {passes} passes")]
    Divergence { passes: usize },
    #[error("unknown name {0}")]
    UnknownName(String),
    #[error("rule count {rules} does not match unknown count {names}")]
    ShapeMismatch { names: usize, rules: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("{what}: first mismatch at z^{index}: expected {expected}, got {actual}")]
    Mismatch {
        what: String,
        index: usize,
        expected: String,
        actual: String,
    },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AsymptoticsError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("Newton iteration did not converge ({0})")]
    NoConvergence(String),
    #[error("singular point is not a square-root branch point: {0}")]
    Degenerate(String),
    #[error("root does not lie on the combinatorial branch: {0}")]
    WrongBranch(String),
    #[error("tail of the truncated series is not negligible: {0}")]
    TailBound(String),
    #[error("requested {digits} digits but working precision is only {precision}")]
    Precision { digits: usize, precision: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Malformed(String),
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
}
