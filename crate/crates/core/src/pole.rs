//! Reciprocal-power term families.
//!
//! A [`PoleTerm`] is one summand `c / (a x + b)^p` with exact rational
//! coefficients, positive slope `a`, and integer order `p >= 1`; a
//! [`PoleTermFamily`] is a non-empty sum of such terms. Every series the
//! summation engine handles (harmonic, odd harmonic, integer zeta rows, the
//! alternating quarter-pi series) is a family, so closed forms for
//! derivatives and antiderivatives are available term by term instead of by
//! symbolic differentiation.
//!
//! Construction rejects terms with a pole at or right of `x = 1`, which
//! keeps every integer sample point of a series in the safe region.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{parse_rational, rat, rat_pow, Rational};
use crate::real::{ln_rational, Real, GUARD_DIGITS};

/// One exact term `c / (a x + b)^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleTerm {
    coeff: Rational,
    slope: Rational,
    offset: Rational,
    order: u32,
}

impl PoleTerm {
    /// Builds `coeff / (slope * x + offset)^order`.
    ///
    /// Requires `slope > 0`, `order >= 1`, and `slope + offset > 0` so the
    /// pole at `x = -offset/slope` lies strictly left of 1.
    pub fn new(coeff: Rational, slope: Rational, offset: Rational, order: u32) -> Result<PoleTerm> {
        if !slope.is_positive() {
            return Err(Error::InvalidTerm(format!(
                "slope must be positive, got {slope}"
            )));
        }
        if order == 0 {
            return Err(Error::InvalidTerm("order must be at least 1".into()));
        }
        if !(&slope + &offset).is_positive() {
            return Err(Error::InvalidTerm(format!(
                "pole at x = {} is not left of 1",
                -&offset / &slope
            )));
        }
        Ok(PoleTerm { coeff, slope, offset, order })
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn slope(&self) -> &Rational {
        &self.slope
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The denominator base `a x + b`.
    pub fn base(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.offset
    }

    /// Exact value `c / (a x + b)^p`; errors on the pole.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        let base = self.base(x);
        if base.is_zero() {
            return Err(Error::PoleAt { x: x.clone() });
        }
        Ok(&self.coeff / rat_pow(&base, i64::from(self.order))?)
    }

    /// Exact k-th derivative at `x`.
    ///
    /// Differentiating `c (a x + b)^-p` brings down `-p a` each time:
    /// the k-th derivative is
    /// `c (-1)^k a^k p (p+1) ... (p+k-1) / (a x + b)^(p+k)`.
    pub fn kth_derivative_at(&self, k: u32, x: &Rational) -> Result<Rational> {
        let base = self.base(x);
        if base.is_zero() {
            return Err(Error::PoleAt { x: x.clone() });
        }
        let mut rising = BigInt::one();
        for j in 0..u64::from(k) {
            rising *= BigInt::from(u64::from(self.order) + j);
        }
        let mut numer = &self.coeff * Rational::from(rising);
        numer *= rat_pow(&self.slope, i64::from(k))?;
        if k % 2 == 1 {
            numer = -numer;
        }
        Ok(numer / rat_pow(&base, i64::from(self.order + k))?)
    }
}

impl fmt::Display for PoleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/(", self.coeff)?;
        if !self.slope.is_one() {
            write!(f, "{}", self.slope)?;
        }
        write!(f, "x")?;
        if self.offset.is_positive() {
            write!(f, "+{}", self.offset)?;
        } else if self.offset.is_negative() {
            write!(f, "{}", self.offset)?;
        }
        write!(f, ")^{}", self.order)
    }
}

/// Exact antiderivative of a family, split into the algebraic part and a
/// list of `(weight, argument)` logarithm pairs: the value at `x` is
/// `algebraic + sum weight * ln(argument)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiderivativeParts {
    pub algebraic: Rational,
    pub logarithms: Vec<(Rational, Rational)>,
}

/// A non-empty sum of [`PoleTerm`]s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleTermFamily {
    terms: Vec<PoleTerm>,
}

impl PoleTermFamily {
    pub fn new(terms: Vec<PoleTerm>) -> Result<PoleTermFamily> {
        if terms.is_empty() {
            return Err(Error::InvalidTerm("family needs at least one term".into()));
        }
        Ok(PoleTermFamily { terms })
    }

    /// `1/x`, the harmonic series term.
    pub fn harmonic() -> PoleTermFamily {
        let term = PoleTerm::new(rat(1, 1), rat(1, 1), rat(0, 1), 1).expect("static term");
        PoleTermFamily { terms: vec![term] }
    }

    /// `1/(2x - 1)`, the odd-denominator harmonic term.
    pub fn odd_harmonic() -> PoleTermFamily {
        let term = PoleTerm::new(rat(1, 1), rat(2, 1), rat(-1, 1), 1).expect("static term");
        PoleTermFamily { terms: vec![term] }
    }

    /// `1/x^s`, the integer zeta row; errors on `s = 0`.
    pub fn zeta(s: u32) -> Result<PoleTermFamily> {
        if s == 0 {
            return Err(Error::UnsupportedExponent(0));
        }
        let term = PoleTerm::new(rat(1, 1), rat(1, 1), rat(0, 1), s)?;
        Ok(PoleTermFamily { terms: vec![term] })
    }

    /// `1/(4x - 3) - 1/(4x - 1)`, whose sum over `x >= 1` is a quarter of pi.
    pub fn leibniz() -> PoleTermFamily {
        let plus = PoleTerm::new(rat(1, 1), rat(4, 1), rat(-3, 1), 1).expect("static term");
        let minus = PoleTerm::new(rat(-1, 1), rat(4, 1), rat(-1, 1), 1).expect("static term");
        PoleTermFamily { terms: vec![plus, minus] }
    }

    pub fn terms(&self) -> &[PoleTerm] {
        &self.terms
    }

    /// Exact value of the general term at `x`.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for term in &self.terms {
            acc += term.evaluate(x)?;
        }
        Ok(acc)
    }

    /// Exact k-th derivative of the general term at `x`.
    pub fn kth_derivative_at(&self, k: u32, x: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for term in &self.terms {
            acc += term.kth_derivative_at(k, x)?;
        }
        Ok(acc)
    }

    /// Exact antiderivative at `x`, split into algebraic and logarithm parts.
    ///
    /// Order 1 integrates to `(c/a) ln(a x + b)`; order `p >= 2` integrates
    /// to `c (a x + b)^(1-p) / (a (1-p))`. The integration constant is zero
    /// for every term.
    pub fn antiderivative_parts(&self, x: &Rational) -> Result<AntiderivativeParts> {
        let mut algebraic = Rational::zero();
        let mut logarithms = Vec::new();
        for term in &self.terms {
            let base = term.base(x);
            if term.order == 1 {
                if !base.is_positive() {
                    return Err(Error::LnNonPositive(base));
                }
                logarithms.push((&term.coeff / &term.slope, base));
            } else {
                if base.is_zero() {
                    return Err(Error::PoleAt { x: x.clone() });
                }
                let down = i64::from(term.order) - 1;
                let weight = &term.coeff / (&term.slope * Rational::from(BigInt::from(-down)));
                algebraic += weight * rat_pow(&base, -down)?;
            }
        }
        Ok(AntiderivativeParts { algebraic, logarithms })
    }

    /// Antiderivative value rendered at `digits` fractional digits.
    ///
    /// Logarithms are summed at `digits + GUARD_DIGITS` and the result is
    /// rounded once at the end.
    pub fn antiderivative_at(&self, x: &Rational, digits: u32) -> Result<Real> {
        let parts = self.antiderivative_parts(x)?;
        let work = digits + GUARD_DIGITS;
        let mut acc = Real::from_rational(&parts.algebraic, work);
        for (weight, argument) in &parts.logarithms {
            acc = acc.add(&ln_rational(argument, work)?.mul_rational(weight));
        }
        Ok(acc.rescale(digits))
    }
}

impl fmt::Display for PoleTermFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

fn parse_term(text: &str) -> Result<PoleTerm> {
    // Whitespace carries no meaning anywhere in a term literal.
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let split = compact.find("/(").ok_or_else(|| {
        Error::Parse(format!("term {text:?} must look like c/(a x + b)^p"))
    })?;
    let coeff = parse_rational(&compact[..split])?;
    let rest = &compact[split + 2..];
    let close = rest
        .find(')')
        .ok_or_else(|| Error::Parse(format!("term {text:?} is missing `)`")))?;
    let inner = &rest[..close];
    let tail = &rest[close + 1..];
    let order: u32 = if tail.is_empty() {
        1
    } else {
        let digits = tail
            .strip_prefix('^')
            .ok_or_else(|| Error::Parse(format!("unexpected trailing {tail:?} in {text:?}")))?;
        digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent {digits:?} in {text:?}")))?
    };
    let x_at = inner
        .find('x')
        .ok_or_else(|| Error::Parse(format!("term {text:?} has no x in its denominator")))?;
    if inner.rfind('x') != Some(x_at) {
        return Err(Error::Parse(format!(
            "term {text:?} must have exactly one x"
        )));
    }
    let slope = match &inner[..x_at] {
        "" => rat(1, 1),
        a => parse_rational(a)?,
    };
    let offset = match &inner[x_at + 1..] {
        "" => rat(0, 1),
        b => parse_rational(b)?,
    };
    PoleTerm::new(coeff, slope, offset, order)
}

impl FromStr for PoleTermFamily {
    type Err = Error;

    /// Parses literals such as `1/(4x-3)^1; -1/(4x-1)^1` or `1/(x)^2`.
    /// Whitespace is free, `^p` defaults to `^1`, and every rational part
    /// may be an integer or a fraction.
    fn from_str(s: &str) -> Result<PoleTermFamily> {
        let terms = s
            .split(';')
            .map(parse_term)
            .collect::<Result<Vec<PoleTerm>>>()?;
        PoleTermFamily::new(terms)
    }
}
