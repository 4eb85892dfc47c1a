//! Closed-form power sums.
//!
//! For the general term `x^n` the summation formula collapses to a
//! polynomial: integrate to `x^(n+1)/(n+1)`, then add each table
//! coefficient times the matching derivative of `x^n` (a falling-factorial
//! multiple of a lower power). Dropping the constant term normalizes
//! `S(0) = 0`, which makes `S(x) - S(x-1) = x^n` hold exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coefficients::EmCoefficientTable;
use crate::polynomial::RationalPolynomial;
use crate::rational::Rational;

/// The polynomial `S_n` with `S_n(x) = 1^n + 2^n + ... + x^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumPolynomial {
    power: u32,
    poly: RationalPolynomial,
}

/// Falling factorial `n (n-1) ... (n-steps+1)`; 1 for zero steps.
fn falling_factorial(n: u32, steps: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..steps {
        acc *= BigInt::from(n - i);
    }
    acc
}

impl PowerSumPolynomial {
    pub fn new(power: u32) -> PowerSumPolynomial {
        let n = power as usize;
        let table = EmCoefficientTable::generate(n + 1);
        let mut coeffs = vec![Rational::zero(); n + 2];
        coeffs[n + 1] = Rational::new(BigInt::one(), BigInt::from(power + 1));
        // alpha_k picks up the (k-1)-th derivative of x^n; the k = n+1 term
        // is the constant and is dropped.
        for k in 1..=n {
            let alpha = table.get(k).expect("table generated to n+1 entries");
            let scale = Rational::from_integer(falling_factorial(power, k as u32 - 1));
            coeffs[n + 1 - k] += alpha * scale;
        }
        PowerSumPolynomial { power, poly: RationalPolynomial::new(coeffs) }
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn polynomial(&self) -> &RationalPolynomial {
        &self.poly
    }

    pub fn evaluate(&self, upto: u64) -> Rational {
        self.poly.evaluate(&Rational::from_integer(BigInt::from(upto)))
    }

    /// Textbook rendering, highest power first: `x^3/3 + x^2/2 + x/6`.
    pub fn to_term_string(&self) -> String {
        let coeffs = self.poly.coeffs();
        let mut out = String::new();
        for power in (0..coeffs.len()).rev() {
            let c = &coeffs[power];
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let numer = c.numer().abs();
            let denom = c.denom();
            if power == 0 {
                out.push_str(&numer.to_string());
            } else {
                if !numer.is_one() {
                    out.push_str(&numer.to_string());
                }
                out.push('x');
                if power > 1 {
                    out.push_str(&format!("^{power}"));
                }
            }
            if !denom.is_one() {
                out.push_str(&format!("/{denom}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `1^n + 2^n + ... + upto^n`, exactly.
pub fn power_sum(power: u32, upto: u64) -> Rational {
    PowerSumPolynomial::new(power).evaluate(upto)
}
