use thiserror::Error;

use crate::classes::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {0}")]
    NegativePart(i64),

    #[error("difference undefined: part {index} of the minuend is {minuend}, smaller than {subtrahend}")]
    NotDominated {
        index: usize,
        minuend: u64,
        subtrahend: u64,
    },

    #[error("part {part} occurs {count} times; decomposition needs every multiplicity to be at most 2")]
    MultiplicityTooHigh { part: u64, count: usize },

    #[error("{partition} is not in {class}: {violation}")]
    NotInClass {
        partition: String,
        class: String,
        violation: Violation,
    },

    #[error("cannot parse partition `{input}`: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("cannot parse series `{input}`: {reason}")]
    ParseSeries { input: String, reason: String },

    #[error("invalid class spec `{0}`")]
    InvalidClassSpec(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
