//! Summation coefficients.
//!
//! The table inverts the forward-difference relation term by term: with
//! `alpha_0 = 1`, each later coefficient is the alternating combination of
//! its predecessors weighted by reciprocal factorials,
//!
//! ```text
//! alpha_k = alpha_{k-1}/2! - alpha_{k-2}/3! + alpha_{k-3}/4! - ...
//! ```
//!
//! which yields 1, 1/2, 1/12, 0, -1/720, 0, 1/30240, ... The cross-check is
//! classical: `k! * alpha_k` is the k-th Bernoulli number in the `B_1 = +1/2`
//! convention, computed here by the independent binomial recurrence
//! `B_m = 1 - (1/(m+1)) * sum_{j<m} C(m+1, j) B_j`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::real::Real;

/// Immutable table of summation coefficients `alpha_0 .. alpha_{len-1}`.
///
/// Structure (verified by tests): `alpha_0 = 1`, `alpha_1 = 1/2`, every odd
/// index from 3 on is exactly zero, and the nonzero entries alternate in
/// sign with `alpha_{4k} < 0` and `alpha_{4k+2} > 0` for `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmCoefficientTable {
    coeffs: Vec<Rational>,
}

impl EmCoefficientTable {
    /// Default length: enough entries to drive 16 derivative terms.
    pub const DEFAULT_LEN: usize = 34;

    /// Generates the first `len` coefficients by the inversion recurrence.
    pub fn generate(len: usize) -> EmCoefficientTable {
        let len = len.max(1);
        let mut coeffs = Vec::with_capacity(len);
        coeffs.push(Rational::one());
        for k in 1..len {
            let mut acc = Rational::zero();
            let mut sign = Rational::one();
            for j in 1..=k {
                let weight = Rational::new(BigInt::one(), factorial(j as u64 + 1));
                acc += &sign * &coeffs[k - j] * weight;
                sign = -sign;
            }
            coeffs.push(acc);
        }
        EmCoefficientTable { coeffs }
    }

    pub fn with_default_len() -> EmCoefficientTable {
        EmCoefficientTable::generate(EmCoefficientTable::DEFAULT_LEN)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Rational> {
        self.coeffs.get(index)
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Decimal rendering of coefficient `index` at the given scale.
    pub fn decimal(&self, index: usize, digits: u32) -> Result<Real> {
        let coeff = self
            .get(index)
            .ok_or_else(|| Error::Parse(format!("coefficient index {index} out of range")))?;
        Ok(Real::from_rational(coeff, digits))
    }
}

/// Decimal rendering of a single coefficient, generating just enough table.
pub fn coefficient_decimal(index: usize, digits: u32) -> Real {
    let table = EmCoefficientTable::generate(index + 1);
    Real::from_rational(&table.coeffs[index], digits)
}

/// k-th Bernoulli number, sign convention `B_1 = +1/2`.
pub fn bernoulli(k: usize) -> Rational {
    bernoulli_sequence(k).pop().expect("sequence is non-empty")
}

/// Bernoulli numbers `B_0 .. B_n` via the binomial recurrence.
pub fn bernoulli_sequence(n: usize) -> Vec<Rational> {
    let mut seq: Vec<Rational> = Vec::with_capacity(n + 1);
    seq.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, b) in seq.iter().enumerate() {
            let choose = num_integer::binomial(BigInt::from(m + 1), BigInt::from(j));
            acc += b * Rational::from_integer(choose);
        }
        let m1 = Rational::from_integer(BigInt::from(m + 1));
        seq.push(Rational::one() - acc / m1);
    }
    seq
}
