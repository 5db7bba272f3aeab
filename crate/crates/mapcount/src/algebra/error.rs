use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("constant term is zero or not a unit; cannot invert series")]
    NonUnitConstantTerm,
    #[error("inner series has a nonzero constant term; composition undefined")]
    NonzeroConstantTerm,
    #[error("series must have valuation exactly 1 with a unit linear coefficient")]
    BadValuation,
    #[error("system is not triangular order-by-order: residual nonzero at z^{order}")]
    NotTriangular { order: usize },
    #[error("non-exact division: {context}")]
    NonExactDivision { context: String },
    #[error("series order {have} is insufficient; need at least {need}")]
    InsufficientOrder { need: usize, have: usize },
    #[error("bad series payload: {0}")]
    BadPayload(String),
}
