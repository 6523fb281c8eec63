use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over F_{0}")]
    NotIrreducible(u64),
    #[error("modulus has degree {found}, expected {expected}")]
    BadDegree { expected: usize, found: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("field of order {0} is too large (at most 4096 supported)")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero element has no multiplicative order")]
    ZeroElement,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("degree {degree} exceeds bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is rank deficient: no pivot in column {0}")]
    RankDeficient(usize),
    #[error("divisor matrix is singular")]
    SingularDivisor,
    #[error("rows do not generate a module containing the block moduli: {0}")]
    NotAGpm(String),
    #[error("shift constant {index} is zero")]
    ZeroShiftConstant { index: usize },
    #[error("kappa {kappa} out of range for extension degree {e}")]
    InvalidKappa { kappa: u32, e: u32 },
    #[error("shift constants violate the hull hypothesis for kappa = {kappa} (lambda_j^(p^(e-kappa)+1) != 1)")]
    AssumptionViolated { kappa: u32 },
    #[error("codes are not comparable: {0}")]
    IncompatibleCodes(String),
    #[error("enumeration needs {required} codewords, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("minimum distance of the zero code is undefined")]
    ZeroCode,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
