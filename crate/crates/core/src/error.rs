use thiserror::Error;

use crate::scalar::Field;

/// Errors raised by the algebra kernel (arithmetic, Gröbner bases, resolutions).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not an odd prime below 2^31")]
    InvalidPrime(u32),
    #[error("unknown field tag `{0}` (expected `rational` or `fp:P`)")]
    InvalidFieldTag(String),
    #[error("denominator vanishes in the coefficient field")]
    ZeroDenominator,
    #[error("mixed coefficient fields: {0} and {1}")]
    FieldMismatch(Field, Field),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("element does not belong to the given free module")]
    ParentMismatch,
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("colon by the zero polynomial")]
    ColonByZero,
    #[error("Fitting ideal of a {rows}x{cols} matrix needs rows <= cols")]
    FittingShape { rows: usize, cols: usize },
    #[error("saturation did not stabilise within {0} quotients")]
    SaturationDiverged(usize),
    #[error("the unit ideal defines the empty scheme")]
    EmptyScheme,
    #[error("support has projective dimension {0}, expected at most 1")]
    SupportTooLarge(i64),
    #[error("resolution is not minimal: {0}")]
    NonMinimal(String),
    #[error("no generator of degree {0} in F0 to serve as the marked section")]
    MarkerAbsent(i64),
    #[error("resolution longer than the number of variables allows ({0})")]
    ResolutionTooLong(usize),
}

/// Errors from the polynomial text parser. Offsets are byte offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("division is not allowed (byte {offset})")]
    Division { offset: usize },
    #[error("literal at byte {offset} has a denominator that vanishes in the field")]
    ZeroDenominator { offset: usize },
}

/// Errors from the sequence-level analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogtanError {
    #[error("sequence is not normal: V(Fitt0) has projective dimension {dimension} and degree {divisor_degree}")]
    NotNormal { dimension: i64, divisor_degree: i64 },
    #[error("f and g are algebraically dependent (all 2x2 Jacobian minors vanish)")]
    Dependent,
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("Bourbaki extraction failed: {0}")]
    BourbakiFailed(String),
    #[error("curve is not reduced: Jacobian scheme has projective dimension {0}")]
    NotReduced(i64),
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
