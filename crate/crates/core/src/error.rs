use thiserror::Error;

/// Errors surfaced by the library. Verification *failures* are reported as
/// data by the checking routines; `Error` is reserved for contract
/// violations, bad input and parameter-regime problems.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("mismatched operands: {0}")]
    Mismatch(String),

    #[error("node {node} is not removable from {shape}")]
    NotRemovable { node: String, shape: String },

    #[error("node {node} is not addable to {shape}")]
    NotAddable { node: String, shape: String },

    #[error("basis would have {size} elements, above the guard of {guard}")]
    SizeGuard { size: usize, guard: usize },

    #[error("parameter regime violation: {0}")]
    Regime(String),

    #[error("division by zero in the coefficient field")]
    DivisionByZero,

    #[error("internal fault: {0}")]
    Internal(String),
}
