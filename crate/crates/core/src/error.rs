use thiserror::Error;

/// Errors raised by simulator, protocol and post-processing operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count {got} outside supported range {min}..={max}")]
    QubitCount { got: usize, min: usize, max: usize },

    #[error("qubit index {index} out of range for {num_qubits}-qubit state")]
    QubitIndex { index: usize, num_qubits: usize },

    #[error("cz gate needs two distinct qubits, got {0} twice")]
    CzSameQubit(usize),

    #[error("measurement setting has {got} bases but the state has {want} qubits")]
    SettingLength { got: usize, want: usize },

    #[error("visibility {0} outside [0, 1]")]
    Visibility(f64),

    #[error("no deterministic outcome relation for {context}; the settings table is inconsistent with the resource state")]
    NoDeterministicRule { context: String },

    #[error("transcript has no {0} rounds; nothing to estimate")]
    EmptyEstimate(&'static str),

    #[error("{name} = {value} rejected: {why}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        why: &'static str,
    },

    #[error("block length {0} unsupported; expected 16200 or 64800")]
    BlockLength(usize),

    #[error("bit string length {got} does not match expected {want}")]
    BitLength { got: usize, want: usize },

    #[error("requested {requested} output bits but only {available} input bits are available")]
    OutputTooLong { requested: usize, available: usize },

    #[error("code construction failed: {0}")]
    CodeConstruction(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
