//! Commands behind the `k4links` binary, usable as a library by tests.

pub mod constants;
pub mod reference;
pub mod series;
pub mod verify;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}
