use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty collection")]
    EmptyCollection,
    #[error("record {index} has an empty sequence")]
    EmptySequence { index: usize },
    #[error("record {index} contains reserved byte 0x{byte:02x} at offset {offset}")]
    ReservedByte { index: usize, offset: usize, byte: u8 },
    #[error("malformed FASTA: {0}")]
    Fasta(String),
    #[error("empty input")]
    EmptyInput,
    #[error("expected a {expected} transform, got {found}")]
    WrongVariant { expected: String, found: String },
    #[error("transform is already normalized")]
    AlreadyNormalized,
    #[error("malformed transform: {0}")]
    MalformedTransform(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("edit distance needs {cells} DP cells, above the limit of {limit}")]
    EditGuard { cells: u128, limit: u128 },
    #[error("input of size {size} exceeds the oracle limit of {limit}")]
    SizeGuard { size: usize, limit: usize },
    #[error("k = {k} is outside the supported range {min}..={max}")]
    KOutOfRange { k: usize, min: usize, max: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("malformed run-length encoding: {0}")]
    InvalidRle(String),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
