use std::fmt;

use crate::rational::Rational;

/// Errors shared across the engine. Domain violations are explicit values,
/// never panics, so the CLI can map them to exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exact division by zero (rational arithmetic or a zero tolerance path).
    DivisionByZero,
    /// Logarithm of a non-positive argument.
    LnNonPositive(Rational),
    /// A pole-family evaluation hit a zero denominator at the given point.
    PoleAt { x: Rational },
    /// Newton refinement found a zero derivative; names the offending iterate.
    ZeroDerivative { iteration: usize, at: Rational },
    /// A pole term violated a structural constraint (a > 0, p >= 1, no pole
    /// on the summation range).
    InvalidTerm(String),
    /// A literal (number, polynomial or term family) failed to parse.
    Parse(String),
    /// Unsupported integer zeta exponent; only s in {2, 3, 4} is wired up.
    UnsupportedExponent(u32),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::LnNonPositive(x) => write!(f, "ln of non-positive argument {x}"),
            Error::PoleAt { x } => write!(f, "family has a pole at x = {x}"),
            Error::ZeroDerivative { iteration, at } => {
                write!(f, "zero derivative at iterate {iteration} (x = {at})")
            }
            Error::InvalidTerm(msg) => write!(f, "invalid term: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::UnsupportedExponent(s) => {
                write!(f, "unsupported exponent s = {s} (expected 2, 3 or 4)")
            }
        }
    }
}

impl std::error::Error for Error {}
