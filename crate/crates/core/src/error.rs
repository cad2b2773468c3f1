use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("not a weight vector: {0}")]
    NotWeightVector(String),
    #[error("not a Gelfand-Tsetlin pattern: {0}")]
    NotAPattern(String),
    #[error("invalid highest weight: {0}")]
    InvalidWeight(String),
    #[error("incompatible labels: {0}")]
    IncompatibleLabels(String),
    #[error("scale exceeded: {count} pattern tuples, bound {bound}")]
    ScaleExceeded { count: u128, bound: u128 },
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("unbounded enumeration: {0}")]
    Unbounded(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("linear system has no solution: {0}")]
    Unsolvable(String),
}

impl Error {
    /// Stable variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::GroupMismatch(_) => "GroupMismatch",
            Error::NotWeightVector(_) => "NotWeightVector",
            Error::NotAPattern(_) => "NotAPattern",
            Error::InvalidWeight(_) => "InvalidWeight",
            Error::IncompatibleLabels(_) => "IncompatibleLabels",
            Error::ScaleExceeded { .. } => "ScaleExceeded",
            Error::InvalidLattice(_) => "InvalidLattice",
            Error::Unbounded(_) => "Unbounded",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Unsolvable(_) => "Unsolvable",
        }
    }
}
