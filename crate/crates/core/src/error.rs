use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("constant polynomial: {0}")]
    ConstantPolynomial(&'static str),

    #[error("{p} divides the leading coefficient")]
    BadPrime { p: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("modulus {0} is not monic")]
    NotMonic(String),

    #[error("polynomial {0} is reducible")]
    Reducible(String),

    #[error("elements belong to different number fields")]
    FieldMismatch,

    #[error("expected a polynomial of degree {expected}, got degree {got}")]
    WrongDegree { expected: String, got: usize },

    #[error("constant term must be nonzero")]
    ZeroConstantTerm,

    #[error("shape precondition violated: {0}")]
    Shape(String),

    #[error("construction postcondition failed: {0}")]
    Postcondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("discriminant mismatch at k={k}: closed form {closed}, resultant {resultant}")]
    DiscriminantMismatch {
        k: u32,
        closed: String,
        resultant: String,
    },

    #[error("checkpoint does not match this search: {0}")]
    CheckpointMismatch(String),

    #[error("checkpoint i/o: {0}")]
    Io(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
