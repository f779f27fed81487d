use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("cannot decode map: {0}")]
    Decode(String),
    #[error("map is not planar")]
    NotPlanar,
    #[error("underlying graph has a K4 minor")]
    HasK4Minor,
    #[error("map has no crossing information")]
    NoCrossings,
    #[error("3-edge-connected block is not a doubled cycle: {0}")]
    UnexpectedBlock(String),
}
