use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1, got {0}")]
    InvalidDegree(u32),
    #[error("field of order {p}^{m} exceeds the supported size (q <= {max})")]
    FieldTooLarge { p: u64, m: u32, max: u64 },
    #[error("coefficient {0} is not a valid field element")]
    InvalidElement(u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials")]
    GcdOfZeros,
    #[error("modulus must be monic")]
    NotMonic,
    #[error("modulus must have degree at least 1")]
    ConstantModulus,
    #[error("residue space of size {0} is too large to tabulate")]
    ResidueSpaceTooLarge(u128),
    #[error("elements belong to different unit groups")]
    GroupMismatch,
    #[error("matrix is singular (rank deficient)")]
    Singular,
    #[error("lattice is not contained in the ambient lattice")]
    NotContained,
    #[error("polynomial is not coprime to the modulus")]
    NotCoprime,
    #[error("polynomial does not split into distinct linear factors")]
    NotSplitSquarefree,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("invalid invariant-factor chain: {0}")]
    InvalidChain(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
