//! Fixed-point decimals.
//!
//! A [`Real`] is an exact `mantissa * 10^-scale` with a `BigInt` mantissa.
//! The scale is the number of stored fractional digits; every operand of an
//! arithmetic expression must carry the same scale, and each rounding step
//! rounds half away from zero. Internally the engine computes at the
//! requested scale plus [`GUARD_DIGITS`] guard digits and rounds once at the
//! end, so rendered digits are stable against intermediate rounding.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Guard digits used for intermediate work at scale `D + GUARD_DIGITS`.
pub const GUARD_DIGITS: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Real {
    mantissa: BigInt,
    scale: u32,
}

pub(crate) fn ten_pow(n: u32) -> BigInt {
    BigInt::from(10u32).pow(n)
}

/// `numer / denom` rounded half away from zero; `denom` must be positive.
fn div_round_half_away(numer: &BigInt, denom: &BigInt) -> BigInt {
    debug_assert!(denom.is_positive());
    let (mut q, r) = num_integer::Integer::div_rem(numer, denom);
    if &r.abs() * 2 >= *denom {
        if numer.is_negative() {
            q -= 1u32;
        } else {
            q += 1u32;
        }
    }
    q
}

impl Real {
    pub fn zero(scale: u32) -> Real {
        Real { mantissa: BigInt::zero(), scale }
    }

    pub fn from_int(value: i64, scale: u32) -> Real {
        Real { mantissa: BigInt::from(value) * ten_pow(scale), scale }
    }

    /// Nearest fixed-point value at the given scale, half away from zero.
    /// The result is within `0.5 * 10^-scale` of the input.
    pub fn from_rational(value: &Rational, scale: u32) -> Real {
        let numer = value.numer() * ten_pow(scale);
        Real { mantissa: div_round_half_away(&numer, value.denom()), scale }
    }

    /// Exact rational value of this fixed-point number.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), ten_pow(self.scale))
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn abs(&self) -> Real {
        Real { mantissa: self.mantissa.abs(), scale: self.scale }
    }

    pub fn neg(&self) -> Real {
        Real { mantissa: -&self.mantissa, scale: self.scale }
    }

    /// Change scale; exact when widening, rounds half away when narrowing.
    pub fn rescale(&self, scale: u32) -> Real {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Real {
                mantissa: &self.mantissa * ten_pow(scale - self.scale),
                scale,
            },
            Ordering::Less => Real {
                mantissa: div_round_half_away(&self.mantissa, &ten_pow(self.scale - scale)),
                scale,
            },
        }
    }

    fn assert_same_scale(&self, other: &Real, op: &str) {
        assert_eq!(
            self.scale, other.scale,
            "{op} requires equal scales ({} vs {})",
            self.scale, other.scale
        );
    }

    pub fn add(&self, other: &Real) -> Real {
        self.assert_same_scale(other, "add");
        Real { mantissa: &self.mantissa + &other.mantissa, scale: self.scale }
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.assert_same_scale(other, "sub");
        Real { mantissa: &self.mantissa - &other.mantissa, scale: self.scale }
    }

    /// Product rounded back to the shared scale.
    pub fn mul(&self, other: &Real) -> Real {
        self.assert_same_scale(other, "mul");
        let wide = &self.mantissa * &other.mantissa;
        Real { mantissa: div_round_half_away(&wide, &ten_pow(self.scale)), scale: self.scale }
    }

    /// Exact scaling by a machine integer.
    pub fn mul_int(&self, k: i64) -> Real {
        Real { mantissa: &self.mantissa * BigInt::from(k), scale: self.scale }
    }

    /// Division by a nonzero machine integer, rounded at the scale.
    pub fn div_int(&self, k: i64) -> Result<Real> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        let (numer, denom) = if k < 0 {
            (-&self.mantissa, BigInt::from(k.unsigned_abs()))
        } else {
            (self.mantissa.clone(), BigInt::from(k))
        };
        Ok(Real { mantissa: div_round_half_away(&numer, &denom), scale: self.scale })
    }

    /// Product with an exact rational, rounded once at this scale.
    pub fn mul_rational(&self, factor: &Rational) -> Real {
        let numer = &self.mantissa * factor.numer();
        let denom = factor.denom();
        let (numer, denom) = if denom.is_negative() {
            (-numer, -denom.clone())
        } else {
            (numer, denom.clone())
        };
        Real { mantissa: div_round_half_away(&numer, &denom), scale: self.scale }
    }

    /// `|self - other|` with scales aligned exactly to the wider one.
    pub fn abs_delta(&self, other: &Real) -> Real {
        let scale = self.scale.max(other.scale);
        self.rescale(scale).sub(&other.rescale(scale)).abs()
    }

    /// Natural logarithm rendered at `digits` fractional digits.
    /// The argument is taken exactly; errors unless it is positive.
    pub fn ln(&self, digits: u32) -> Result<Real> {
        ln_rational(&self.to_rational(), digits)
    }
}

/// Natural logarithm of an exact rational at `digits` fractional digits.
///
/// The argument is scaled by powers of two into [2/3, 4/3], where
/// `ln x = 2 atanh t` with `t = (x-1)/(x+1)` and `|t| <= 1/5`; the series is
/// summed at `digits + GUARD_DIGITS` and the power-of-two part is restored
/// via `ln 2 = 2 atanh(1/3)`. The result is within `10^-(digits+1)` of the
/// true logarithm, comfortably inside the contract bound of
/// `10^-(digits-1)`.
pub fn ln_rational(value: &Rational, digits: u32) -> Result<Real> {
    if !value.is_positive() {
        return Err(Error::LnNonPositive(value.clone()));
    }
    let work = digits + GUARD_DIGITS;
    let upper = rat(4, 3);
    let lower = rat(2, 3);
    let half = rat(1, 2);
    let two = rat(2, 1);
    let mut s = value.clone();
    let mut doublings: i64 = 0;
    while s > upper {
        s *= &half;
        doublings += 1;
    }
    while s < lower {
        s *= &two;
        doublings -= 1;
    }
    let one = rat(1, 1);
    let t = (&s - &one) / (&s + &one);
    let mut acc = atanh_series(&t, work).mul_int(2);
    if doublings != 0 {
        let ln2 = atanh_series(&rat(1, 3), work).mul_int(2);
        acc = acc.add(&ln2.mul_int(doublings));
    }
    Ok(acc.rescale(digits))
}

/// atanh by its odd power series at the given scale; requires |t| <= 1/3 so
/// the terms decay by at least 1/9 per step.
fn atanh_series(t: &Rational, scale: u32) -> Real {
    debug_assert!(t.abs() <= rat(1, 3));
    let t_fixed = Real::from_rational(t, scale);
    let t_squared = t_fixed.mul(&t_fixed);
    let mut power = t_fixed.clone();
    let mut acc = t_fixed;
    let mut order: i64 = 1;
    loop {
        power = power.mul(&t_squared);
        if power.is_zero() {
            return acc;
        }
        order += 2;
        acc = acc.add(&power.div_int(order).expect("odd order is nonzero"));
    }
}

impl fmt::Display for Real {
    /// Sign, integer part, point, then exactly `scale` fractional digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.abs().to_string();
        let scale = self.scale as usize;
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale - digits.len() + 1), digits)
        } else {
            digits
        };
        let split = padded.len() - scale;
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        if scale == 0 {
            write!(f, "{sign}{padded}")
        } else {
            write!(f, "{sign}{}.{}", &padded[..split], &padded[split..])
        }
    }
}

impl FromStr for Real {
    type Err = Error;

    /// Parses `[sign] digits [. digits]`; the scale is the count of
    /// fractional digits, so the value round-trips exactly.
    fn from_str(text: &str) -> Result<Real> {
        let s = text.trim();
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(Error::Parse(format!("empty decimal {text:?}")));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(Error::Parse(format!("bad decimal {text:?}")));
        }
        let joined = format!("{int_part}{frac_part}");
        let mantissa = BigInt::from_str(if joined.is_empty() { "0" } else { &joined })
            .map_err(|_| Error::Parse(format!("bad decimal {text:?}")))?;
        Ok(Real { mantissa: mantissa * sign, scale: frac_part.len() as u32 })
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    /// Value order; scales are aligned exactly before comparing.
    fn cmp(&self, other: &Real) -> Ordering {
        let scale = self.scale.max(other.scale);
        self.rescale(scale).mantissa.cmp(&other.rescale(scale).mantissa)
    }
}
