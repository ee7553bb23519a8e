use thiserror::Error;

/// Errors produced by construction, parsing and parameter validation.
///
/// Analysis outcomes ("the system is inconsistent", "no structure found")
/// are never errors; they are ordinary return values.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Variable count outside the supported range 1..=24.
    #[error("variable count {0} out of range (expected 1..=24)")]
    VariableCount(u32),

    /// Inner-product constructions need an even number of variables.
    #[error("variable count {0} must be even")]
    OddVariableCount(u32),

    /// Malformed algebraic normal form input; `pos` is a 0-based byte offset.
    #[error("syntax error at position {pos}: {message}")]
    AnfSyntax { pos: usize, message: String },

    /// A variable index in an ANF expression exceeds the declared count.
    #[error("variable x{index} at position {pos} out of range (function has {max} variables)")]
    AnfVariableRange { index: u32, max: u32, pos: usize },

    /// Malformed truth-table file.
    #[error("truth table: {0}")]
    TruthTable(String),

    /// The spectrum handed to a sampler fails the exact sum-of-squares
    /// check and cannot describe a measurement distribution.
    #[error("corrupted spectrum: squared coefficients sum to {got}, expected {expected}")]
    ParsevalViolation { got: u64, expected: u64 },

    /// A numeric parameter is outside its documented domain.
    #[error("parameter {name} = {value} out of range: {requirement}")]
    ParameterRange {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// Run-count planning is undefined for functions with a true structure.
    #[error("differential uniformity is 1: the search never certifies absence")]
    DeltaIsOne,
}

pub type Result<T> = std::result::Result<T, Error>;
