use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree {0} outside the supported range 1..=8")]
    UnsupportedDegree(usize),

    #[error("field order {p}^{r} does not fit in 64 bits")]
    FieldTooLarge { p: u64, r: usize },

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("division by zero")]
    ZeroDivision,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{monomial} is not invariant for q = {q} (weight {weight} is not divisible by {q_minus_one})")]
    NotInvariant {
        monomial: String,
        q: u64,
        weight: u128,
        q_minus_one: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid representation: {}", format_violations(.0))]
    InvalidRep(Vec<crate::reps::Violation>),

    #[error("subspace is not invariant under generator {0}")]
    NotInvariantSubspace(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("identity check failed: {0}")]
    IdentityFailure(String),

    #[error("input error: {0}")]
    Input(String),
}

fn format_violations(v: &[crate::reps::Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
