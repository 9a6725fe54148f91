use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("indeterminate lists differ: {left} vs {right}")]
    ArityMismatch { left: String, right: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("both polynomials are zero")]
    BothZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division is not exact")]
    InexactDivision,
    #[error("expression still depends on `{0}` where a number is required")]
    NotNumeric(String),
    #[error("degree of {name} in H is {degree}, cap is {cap}")]
    DegreeCap { name: &'static str, degree: u32, cap: u32 },
    #[error("operation needs a {0} spec")]
    WrongMode(&'static str),
    #[error("singular linear system: {0}")]
    Singular(&'static str),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("no supported realization (beta = 0 and delta = 0)")]
    Unsupported,
    #[error("sqrt(delta) is not rational for delta = {0}")]
    NonRationalSqrt(String),
    #[error("realization check failed: {0}")]
    RealizationCheck(String),
    #[error("rho^2 vanishes at n = {0}")]
    VanishingRho(i64),
    #[error("non-unitary representation: Phi(n) rho^2(n-1) = {value} at n = {n}")]
    NonUnitary { n: usize, value: String },
    #[error("rank deficient system (rank {rank} of {needed})")]
    RankDeficient { rank: usize, needed: usize },
    #[error("eigenfunction {level} does not decay at the boundary (ratio {ratio:e})")]
    BoundaryDecay { level: usize, ratio: f64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}
