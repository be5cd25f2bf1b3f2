use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis index out of range: e{index} in a {dim}-dimensional algebra")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("product e{i}e{j} must be keyed with i < j")]
    UnorderedPair { i: usize, j: usize },

    #[error("product e{i}e{j} is given more than once")]
    DuplicatePair { i: usize, j: usize },

    #[error("invalid rational literal `{0}`")]
    BadRational(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("variable `{0}` has no value")]
    UnboundVariable(String),

    #[error("matrix is not invertible")]
    Singular,

    #[error("the annihilator is zero; there is nothing to quotient by")]
    ZeroAnnihilator,

    #[error("the algebra has zero product; its quotient by the annihilator is the zero algebra")]
    ZeroQuotient,

    #[error("form {0} does not satisfy the cocycle condition")]
    NotACocycle(String),

    #[error("cohomology classes are linearly dependent")]
    DependentClasses,

    #[error("the algebra does not satisfy the Malcev identity")]
    NotMalcev,

    #[error("need at least one cocycle")]
    NoCocycles,

    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),

    #[error("catalog entry `{name}` needs parameter `{param}`")]
    MissingParameter { name: String, param: String },

    #[error("catalog entry `{0}` has no stored automorphism family")]
    NoFamily(String),

    #[error("invalid file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
