use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("({numerator}) is not divisible by ({denominator}) in Z[q]")]
    NonExactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("palindrome degree {d} is below the polynomial degree {degree}")]
    PalindromeDegree { degree: usize, d: usize },

    #[error("transfer matrix inconsistent at {location}: {detail}")]
    MatrixInconsistent { location: String, detail: String },

    #[error("genus must be at least {min}, got {genus}")]
    GenusOutOfRange { genus: u32, min: u32 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("prime {p} is too small: at least {min} is required")]
    PrimeTooSmall { p: u64, min: u64 },

    #[error("prime {p} is too large for exhaustive enumeration: at most {max} is supported")]
    PrimeTooLarge { p: u64, max: u64 },

    #[error("unknown holonomy tag {0:?} (expected one of id, minus-id, jplus, jminus, xi)")]
    UnknownHolonomy(String),

    #[error("matrix is not in SL(2, F_{p})")]
    NotInGroup { p: u64 },
}
