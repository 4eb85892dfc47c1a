//! Exact fraction arithmetic.
//!
//! [`Rational`] is `num_rational::BigRational`: always in lowest terms with a
//! positive denominator and zero canonicalized to 0/1, so equality is plain
//! structural equality. This module adds the constructors and parsing the
//! engine needs; arithmetic is the ordinary operator set.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Fraction from machine integers. Panics on a zero denominator; use
/// [`parse_rational`] for untrusted input.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exact integer power with negative exponents allowed.
/// Errors on 0^negative.
pub fn rat_pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp >= 0 {
        Ok(pow_unsigned(base, exp as u64))
    } else if base.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(pow_unsigned(base, exp.unsigned_abs()).recip())
    }
}

fn pow_unsigned(base: &Rational, mut exp: u64) -> Rational {
    let mut acc = Rational::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Parses `"n"` or `"n/d"` with optional sign and surrounding whitespace.
/// Rejects zero denominators instead of panicking.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(numer)
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let d = BigInt::from_str(denom)
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Absolute value as a new rational.
pub fn rat_abs(r: &Rational) -> Rational {
    r.abs()
}
