use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable contexts differ")]
    ContextMismatch,
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("complex is void (has no faces at all)")]
    VoidComplex,
    #[error("{n} variables exceeds the supported cap of {cap}")]
    TooManyVariables { n: usize, cap: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("malformed element: {0}")]
    MalformedElement(String),
    #[error("independent computations disagree: {0}")]
    MethodDisagreement(String),
    #[error("cokernel has infinite length: the conductor is not primary to the irrelevant ideal")]
    InfiniteLength,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("{0} is a zerodivisor")]
    ZeroDivisor(String),
    #[error("{0} does not lie in the conductor")]
    NotInConductor(String),
    #[error("ideal contains no non-zerodivisor")]
    NoNonZeroDivisor,
    #[error("height {0} is below the required 2")]
    HeightTooSmall(usize),
    #[error("quotient is not Artinian")]
    NotArtinian,
    #[error("not a parameter ideal: {0}")]
    NotParameterIdeal(String),
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),
    #[error("precision exhausted: no certified valuation window below {window}")]
    PrecisionExhausted { window: usize },
    #[error("degenerate extension: {0}")]
    DegenerateExtension(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown example id `{0}`")]
    UnknownExample(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
