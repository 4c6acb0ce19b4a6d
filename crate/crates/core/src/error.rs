use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight {weight} exceeds the enumeration cutoff {cutoff}")]
    CutoffExceeded { weight: u32, cutoff: u32 },

    #[error("partition {partition} does not fit the {rows}x{cols} rectangle")]
    NotInRectangle {
        partition: Partition,
        rows: u32,
        cols: u32,
    },

    #[error("series truncated at order {have}, but order {need} is required")]
    InsufficientOrder { need: usize, have: usize },

    #[error("{need} variables required, only {have} available")]
    TooFewVariables { need: usize, have: usize },

    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: i64, bound: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
