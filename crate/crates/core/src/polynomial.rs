//! Dense polynomials with exact rational coefficients.
//!
//! Coefficients are stored lowest power first and trailing zeros are
//! trimmed, so the highest stored coefficient of a nonzero polynomial is
//! never zero. The canonical text form is the comma-separated coefficient
//! list in the same order, e.g. `x^3 - 3x - 20` is `"-20,-3,0,1"`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::real::Real;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Builds from lowest-first coefficients; trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<Rational>) -> RationalPolynomial {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> RationalPolynomial {
        RationalPolynomial { coeffs: Vec::new() }
    }

    /// `coeff * x^power`.
    pub fn monomial(coeff: Rational, power: usize) -> RationalPolynomial {
        if coeff.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = coeff;
        RationalPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^power` (zero beyond the stored degree).
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Horner evaluation; exact.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RationalPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        RationalPolynomial::new(coeffs)
    }

    /// Coefficient-wise antiderivative with zero constant term.
    pub fn antiderivative(&self) -> RationalPolynomial {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer(BigInt::from(k + 1)));
        }
        RationalPolynomial::new(coeffs)
    }

    pub fn add(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        RationalPolynomial::new(coeffs)
    }

    pub fn scale(&self, factor: &Rational) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Schoolbook product; exact.
    pub fn mul(&self, other: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::new(coeffs)
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> RationalPolynomial {
        if self.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RationalPolynomial { coeffs }
    }

    /// Coefficients of `p(x + shift)`, by repeated synthetic division.
    /// Exact, O(degree^2) coefficient operations.
    pub fn taylor_shift(&self, shift: &Rational) -> RationalPolynomial {
        let mut coeffs = self.coeffs.clone();
        let degree = match coeffs.len().checked_sub(1) {
            Some(d) if d > 0 && !shift.is_zero() => d,
            _ => return RationalPolynomial { coeffs },
        };
        for k in 0..degree {
            for j in (k..degree).rev() {
                let bump = &coeffs[j + 1] * shift;
                coeffs[j] += bump;
            }
        }
        RationalPolynomial::new(coeffs)
    }

    /// Antiderivative via the alternating derivative series
    /// `sum_k (-1)^k x^{k+1} p^(k)(x) / (k+1)!`, which terminates for
    /// polynomials and carries a zero constant of integration. Equal to
    /// [`RationalPolynomial::antiderivative`] on every input; the two are
    /// kept as independent routes and tested against each other.
    pub fn quadrature_series(&self) -> RationalPolynomial {
        let mut acc = RationalPolynomial::zero();
        let mut deriv = self.clone();
        let mut factorial = BigInt::one();
        let mut negate = false;
        let mut order = 0usize;
        while !deriv.is_zero() {
            factorial *= BigInt::from(order + 1);
            let mut weight = Rational::new(BigInt::one(), factorial.clone());
            if negate {
                weight = -weight;
            }
            acc = acc.add(&deriv.shift_up(order + 1).scale(&weight));
            deriv = deriv.derivative();
            negate = !negate;
            order += 1;
        }
        acc
    }
}

/// One refined root approximation: the final iterate, its exact residual
/// `p(current)`, and how many iterations ran.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonState {
    current: Rational,
    residual: Rational,
    iterations: usize,
}

impl NewtonState {
    pub fn current(&self) -> &Rational {
        &self.current
    }

    pub fn residual(&self) -> &Rational {
        &self.residual
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }
}

/// Newton refinement in exact rational arithmetic: `x <- x - p(x)/p'(x)`.
///
/// Stops when `|p(x)| < tol` or after `max_iters` steps, whichever comes
/// first; a zero derivative is an error naming the iterate it occurred at.
pub fn newton_refine(
    poly: &RationalPolynomial,
    start: Rational,
    tol: &Real,
    max_iters: usize,
) -> Result<NewtonState> {
    let tolerance = tol.to_rational().abs();
    let derivative = poly.derivative();
    let mut current = start;
    let mut residual = poly.evaluate(&current);
    let mut iterations = 0;
    while iterations < max_iters && residual.abs() >= tolerance {
        let slope = derivative.evaluate(&current);
        if slope.is_zero() {
            return Err(Error::ZeroDerivative { iteration: iterations, at: current });
        }
        current = &current - &(&residual / &slope);
        residual = poly.evaluate(&current);
        iterations += 1;
    }
    Ok(NewtonState { current, residual, iterations })
}

impl fmt::Display for RationalPolynomial {
    /// Canonical comma-separated coefficients, lowest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for RationalPolynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<RationalPolynomial> {
        let coeffs = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<Rational>>>()?;
        Ok(RationalPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn poly(csv: &str) -> RationalPolynomial {
        csv.parse().unwrap()
    }

    /// Independent shift oracle: expand `sum c_k (x + a)^k` with binomial
    /// products, no synthetic division involved.
    fn shift_by_expansion(p: &RationalPolynomial, a: &Rational) -> RationalPolynomial {
        let base = RationalPolynomial::new(vec![a.clone(), rat(1, 1)]);
        let mut power = RationalPolynomial::new(vec![rat(1, 1)]);
        let mut acc = RationalPolynomial::zero();
        for k in 0..p.coeffs().len() {
            acc = acc.add(&power.scale(&p.coeff(k)));
            power = power.mul(&base);
        }
        acc
    }

    #[test]
    fn shift_examples() {
        assert_eq!(poly("0,0,1").taylor_shift(&rat(1, 1)), poly("1,2,1"));
        assert_eq!(poly("-20,-3,0,1").taylor_shift(&rat(1, 1)), poly("-22,0,3,1"));
        let p = poly("4,-7/2,0,5");
        assert_eq!(p.taylor_shift(&rat(0, 1)), p);
    }

    #[test]
    fn shift_matches_expansion_oracle() {
        let cases = ["-20,-3,0,1", "1/2,0,-3,7/5,1", "5", "0", "2,-2/3"];
        for csv in cases {
            let p = poly(csv);
            for a in [rat(1, 1), rat(-1, 1), rat(3, 7), rat(-12, 5)] {
                assert_eq!(p.taylor_shift(&a), shift_by_expansion(&p, &a), "p={csv} a={a}");
            }
        }
    }

    #[test]
    fn evaluation_and_calculus() {
        let p = poly("-20,-3,0,1");
        assert_eq!(p.evaluate(&rat(3, 1)), rat(-2, 1));
        assert_eq!(p.derivative(), poly("-3,0,3"));
        assert_eq!(p.antiderivative(), poly("0,-20,-3/2,0,1/4"));
        assert_eq!(p.antiderivative().derivative(), p);
        assert_eq!(RationalPolynomial::zero().evaluate(&rat(9, 2)), rat(0, 1));
    }

    #[test]
    fn quadrature_series_examples() {
        // integral of x is x^2/2, of x^2 is x^3/3, of a constant is a line
        assert_eq!(poly("0,1").quadrature_series(), poly("0,0,1/2"));
        assert_eq!(poly("0,0,1").quadrature_series(), poly("0,0,0,1/3"));
        assert_eq!(poly("7").quadrature_series(), poly("0,7"));
        assert_eq!(RationalPolynomial::zero().quadrature_series(), RationalPolynomial::zero());
    }

    #[test]
    fn newton_first_iterate_is_exact() {
        let p = poly("-20,-3,0,1");
        let state = newton_refine(&p, rat(3, 1), &Real::from_rational(&rat(1, 1000), 10), 1)
            .unwrap();
        assert_eq!(state.current(), &rat(37, 12));
        assert_eq!(state.iterations(), 1);
        assert_eq!(state.residual(), &p.evaluate(&rat(37, 12)));
    }

    #[test]
    fn newton_converges_quadratically() {
        let p = poly("-4,0,1"); // roots +-2
        let tol: Real = "0.00000000000000000001".parse().unwrap();
        let state = newton_refine(&p, rat(3, 1), &tol, 12).unwrap();
        let err = (state.current() - rat(2, 1)).abs();
        assert!(err < rat(1, 10_000_000_000));
        assert!(state.residual().abs() < tol.to_rational());
        assert!(state.iterations() <= 6);
    }

    #[test]
    fn newton_zero_derivative_names_iterate() {
        let p = poly("0,0,1"); // x^2, derivative zero at the start point
        let err = newton_refine(&p, rat(0, 1), &Real::zero(10), 5).unwrap_err();
        assert_eq!(err, Error::ZeroDerivative { iteration: 0, at: rat(0, 1) });
    }

    #[test]
    fn newton_residuals_shrink_on_cubic() {
        let p = poly("-20,-3,0,1");
        let mut last = p.evaluate(&rat(3, 1)).abs();
        for iters in 1..=4 {
            let state = newton_refine(&p, rat(3, 1), &Real::zero(10), iters).unwrap();
            let r = state.residual().abs();
            assert!(r < last, "residual grew at iteration {iters}");
            last = r;
        }
    }

    #[test]
    fn csv_round_trip() {
        for csv in ["-20,-3,0,1", "0", "5/6", "1/2,-3,0,0,7/9"] {
            assert_eq!(poly(csv).to_string(), csv);
        }
        assert_eq!(poly("0,0,0").to_string(), "0");
        assert_eq!(poly("1,2,3,0,0").to_string(), "1,2,3");
        assert!("1,,2".parse::<RationalPolynomial>().is_err());
        assert!("1,x".parse::<RationalPolynomial>().is_err());
        assert!("1/0".parse::<RationalPolynomial>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = RationalPolynomial> {
        prop::collection::vec((-40i64..40, 1i64..12), 0..10)
            .prop_map(|cs| RationalPolynomial::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn shift_round_trip(p in arb_poly(), n in -9i64..9, d in 1i64..9) {
            let a = rat(n, d);
            prop_assert_eq!(p.taylor_shift(&a).taylor_shift(&(-a.clone())), p);
        }

        #[test]
        fn shift_agrees_with_evaluation(p in arb_poly(), n in -9i64..9, d in 1i64..9, t in -6i64..6) {
            let a = rat(n, d);
            let t = rat(t, 1);
            prop_assert_eq!(p.taylor_shift(&a).evaluate(&t), p.evaluate(&(&t + &a)));
        }

        #[test]
        fn quadrature_matches_antiderivative(p in arb_poly()) {
            prop_assert_eq!(p.quadrature_series(), p.antiderivative());
        }
    }
}
