use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q-exponent {exponent} lies below the configured floor {limit}")]
    FloorUnderflow { exponent: i64, limit: i64 },
    #[error("leading coefficient is not a z-free unit")]
    NonUnitLeadingTerm,
    #[error("requested order {requested} exceeds available order {available}")]
    InsufficientOrder { requested: i64, available: i64 },
    #[error("infinite product does not converge")]
    DivergentProduct,
    #[error("theta({j}; q^{modulus}) vanishes identically")]
    ZeroTheta { j: i64, modulus: i64 },
    #[error("brute-force weight {requested} exceeds the cap {cap}")]
    ScaleExceeded { requested: u32, cap: u32 },
    #[error("profile {0} lies below the line")]
    BelowTheLine(String),
    #[error("no expression known for profile {0}")]
    UnknownProfile(String),
    #[error("side condition violated: {0}")]
    SideConditionViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{relation} takes {expected} arguments, got {got}")]
    ArityMismatch { relation: String, expected: usize, got: usize },
    #[error("no certificate within bounds: {0}")]
    NotFound(String),
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
    #[error("search inconclusive: {0}")]
    SearchInconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
