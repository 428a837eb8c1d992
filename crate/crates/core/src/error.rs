use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar literal {text:?}")]
pub struct ScalarParseError {
    pub text: String,
}

impl ScalarParseError {
    pub fn new(text: &str) -> Self {
        ScalarParseError {
            text: text.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistError {
    #[error("delta of order {order} exceeds the regularity index {cap}")]
    DeltaOrderExceedsCap { order: u32, cap: u32 },
    #[error("polynomial degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("point {0} is not real")]
    NonRealPoint(String),
    #[error("expected {expected} pieces for {breakpoints} breakpoints, got {found}")]
    PieceCount {
        breakpoints: usize,
        expected: usize,
        found: usize,
    },
    #[error("breakpoints must be strictly increasing")]
    UnsortedBreakpoints,
    #[error("empty or reversed interval")]
    InvalidInterval,
    #[error("singular supports of order {n} intersect at {point}")]
    IntersectingSingularSupport { n: u32, point: String },
}

/// Syntax error in the expression language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at byte {}: expected {}, found {}",
            self.offset,
            self.expected.join(" | "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Dist(#[from] DistError),
    #[error("malformed record: {0}")]
    Record(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundaryError {
    #[error("shifting delta of order {0} is not supported on jets")]
    OrderTooHigh(u32),
    #[error("the jet calculus is fixed at the point 0, got {0}")]
    NonZeroPoint(String),
    #[error("operator would produce a second derivative of delta")]
    SecondDerivative,
    #[error("malformed operator: {0}")]
    Malformed(String),
    #[error(transparent)]
    Dist(#[from] DistError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchrodingerError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("side condition (1+conj(b))(1-b) - ac vanishes")]
    SideCondition,
    #[error("operator is not self-adjoint")]
    NotSelfAdjoint,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("quadrature did not converge on [{lo}, {hi}]")]
    Quadrature { lo: f64, hi: f64 },
    #[error("scattering system is singular at k = {k}")]
    SingularSystem { k: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
