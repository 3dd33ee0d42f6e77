use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrices belong to different fields")]
    FieldMismatch,

    #[error("shape mismatch in {context}: expected {expected}, found {found}")]
    ShapeMismatch {
        context: &'static str,
        expected: String,
        found: String,
    },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("antipode matrix is not invertible")]
    SingularAntipode,

    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),

    #[error("field characteristic {0} is not allowed here")]
    BadCharacteristic(u64),

    #[error("not a module action: {0}")]
    NotAnAlgebra(String),

    #[error("not a comodule coaction: {0}")]
    NotACoalgebra(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid input at {path}: {message}")]
    Input { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(context: &'static str, expected: impl Into<String>, found: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            context,
            expected: expected.into(),
            found: found.into(),
        }
    }
}
