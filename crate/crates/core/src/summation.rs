//! Asymptotic summation of pole-term series.
//!
//! For a term family `f` the partial sum `S(x) = f(1) + ... + f(x)` is
//! expanded as
//!
//! ```text
//! S(x) = C + integral of f + f(x)/2 + sum over k of a[2k] f^(2k-1)(x)
//! ```
//!
//! with the coefficients `a` from [`crate::coefficients`]. The derivative
//! series is asymptotic, not convergent: its terms shrink to a smallest
//! magnitude and then grow without bound, so it is cut at the smallest term
//! ([`optimal_truncation`]) and the first omitted term serves as the error
//! estimate. The constant `C` is not available in closed form; it is
//! determined empirically by anchoring the expansion to one exact partial
//! sum ([`determine_constant`]). Once `C` is known, any other partial sum
//! and, when the terms decay fast enough, the infinite sum follow from a
//! single tail evaluation.
//!
//! Everything before the final rendering step is exact: direct sums and
//! derivative terms are rationals, and the only rounded quantities are
//! logarithms carried at `digits + GUARD_DIGITS`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coefficients::EmCoefficientTable;
use crate::error::{Error, Result};
use crate::pole::{AntiderivativeParts, PoleTermFamily};
use crate::rational::{rat, rat_abs, Rational};
use crate::real::{ln_rational, Real, GUARD_DIGITS};

/// Rendering scale and tail cap shared by the summation entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummationOptions {
    /// Fractional digits of rendered results.
    pub digits: u32,
    /// Cap on the number of derivative terms.
    pub max_terms: usize,
}

impl Default for SummationOptions {
    fn default() -> SummationOptions {
        SummationOptions { digits: 30, max_terms: 17 }
    }
}

impl SummationOptions {
    pub fn new(digits: u32, max_terms: usize) -> SummationOptions {
        SummationOptions { digits, max_terms }
    }

    fn work(&self) -> u32 {
        self.digits + GUARD_DIGITS
    }
}

/// The expansion pieces at one sample point.
///
/// Exact rationals are kept alongside the rendered values: truncation
/// decisions compare exact magnitudes, while the rendered accessors round
/// at the scale the evaluation was requested at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailEvaluation {
    x: Rational,
    digits: u32,
    integral: AntiderivativeParts,
    half: Rational,
    terms: Vec<Rational>,
    /// Weighted logarithm part of the integral at `digits + GUARD_DIGITS`.
    log_sum: Real,
}

impl TailEvaluation {
    fn assemble(
        family: &PoleTermFamily,
        x: &Rational,
        count: usize,
        digits: u32,
    ) -> Result<TailEvaluation> {
        let integral = family.antiderivative_parts(x)?;
        let half = family.evaluate(x)? / rat(2, 1);
        let terms = signed_terms(family, x, count)?;
        let work = digits + GUARD_DIGITS;
        let mut log_sum = Real::zero(work);
        for (weight, argument) in &integral.logarithms {
            log_sum = log_sum.add(&ln_rational(argument, work)?.mul_rational(weight));
        }
        Ok(TailEvaluation { x: x.clone(), digits, integral, half, terms, log_sum })
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Antiderivative of the general term at `x`, rendered.
    pub fn integral_part(&self) -> Real {
        let work = self.digits + GUARD_DIGITS;
        Real::from_rational(&self.integral.algebraic, work)
            .add(&self.log_sum)
            .rescale(self.digits)
    }

    /// Exact split of the integral into algebraic and logarithm parts.
    pub fn integral_parts(&self) -> &AntiderivativeParts {
        &self.integral
    }

    /// Half the general term at `x`, rendered.
    pub fn half_term(&self) -> Real {
        Real::from_rational(&self.half, self.digits)
    }

    /// Exact value of the half term.
    pub fn half_fraction(&self) -> &Rational {
        &self.half
    }

    /// Signed derivative terms `a[2k] f^(2k-1)(x)` for `k = 1, 2, ...`,
    /// rendered in order.
    pub fn derivative_terms(&self) -> Vec<Real> {
        self.terms
            .iter()
            .map(|t| Real::from_rational(t, self.digits))
            .collect()
    }

    /// Exact values of the derivative terms, in order.
    pub fn derivative_fractions(&self) -> &[Rational] {
        &self.terms
    }

    /// Integral, half term, and the first `k` derivative terms (clamped to
    /// what was evaluated), rounded once at the end.
    pub fn truncated_value(&self, k: usize) -> Real {
        self.value_at_work(k).rescale(self.digits)
    }

    /// Same sum carried at the working scale, for constant determination.
    fn value_at_work(&self, k: usize) -> Real {
        let k = k.min(self.terms.len());
        let mut exact = &self.integral.algebraic + &self.half;
        for term in &self.terms[..k] {
            exact += term;
        }
        Real::from_rational(&exact, self.digits + GUARD_DIGITS).add(&self.log_sum)
    }
}

/// Summation outcome: the constant, a value derived with it, and the
/// truncation bookkeeping behind both.
///
/// `error_estimate` is the magnitude of the first omitted derivative term,
/// a standard asymptotic-series heuristic rather than a bound. It is
/// carried at `digits + GUARD_DIGITS` because the omitted term routinely
/// sits far below the rendering scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummationResult {
    constant: Real,
    value: Real,
    truncation_k: usize,
    error_estimate: Real,
    n: u64,
    digits: u32,
}

impl SummationResult {
    /// The summation constant at `digits`.
    pub fn constant(&self) -> &Real {
        &self.constant
    }

    /// For [`determine_constant`], the exact direct sum rendered at
    /// `digits`; for [`partial_sum`], the evaluated partial sum.
    pub fn value(&self) -> &Real {
        &self.value
    }

    /// Number of derivative terms actually used.
    pub fn truncation_k(&self) -> usize {
        self.truncation_k
    }

    /// Magnitude of the first omitted derivative term.
    pub fn error_estimate(&self) -> &Real {
        &self.error_estimate
    }

    /// The sample point the result was computed at.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }
}

/// Divergence is an outcome, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfiniteSum {
    Convergent(Real),
    Divergent,
}

fn integer_point(x: u64) -> Result<Rational> {
    if x == 0 {
        return Err(Error::InvalidTerm("summation point must be at least 1".into()));
    }
    Ok(Rational::from_integer(BigInt::from(x)))
}

/// Signed derivative terms `a[2k] f^(2k-1)(x)` for `k = 1..=count`, exact.
fn signed_terms(family: &PoleTermFamily, x: &Rational, count: usize) -> Result<Vec<Rational>> {
    let table = EmCoefficientTable::generate(2 * (count + 1) + 2);
    let mut terms = Vec::with_capacity(count);
    for k in 1..=count {
        let coefficient = table.get(2 * k).expect("table sized for the request");
        let derivative = family.kth_derivative_at(2 * k as u32 - 1, x)?;
        terms.push(coefficient * derivative);
    }
    Ok(terms)
}

/// Index of the smallest-magnitude prefix: the largest `k <= cap` with
/// `|t_1| >= ... >= |t_k|`, stopping just before the first growth.
fn scan_truncation(terms: &[Rational], cap: usize) -> usize {
    for k in 1..cap {
        if rat_abs(&terms[k]) > rat_abs(&terms[k - 1]) {
            return k;
        }
    }
    cap
}

/// Evaluates the expansion pieces at `x` with `max_terms` derivative terms,
/// rendered at `digits`.
pub fn em_tail(
    family: &PoleTermFamily,
    x: u64,
    max_terms: usize,
    digits: u32,
) -> Result<TailEvaluation> {
    let x = integer_point(x)?;
    TailEvaluation::assemble(family, &x, max_terms, digits)
}

/// Number of derivative terms to keep at `x`: the series is asymptotic, so
/// the cut is placed at the smallest-magnitude term (or at `cap` while the
/// terms are still shrinking). Deterministic, exact comparisons.
pub fn optimal_truncation(family: &PoleTermFamily, x: u64, cap: usize) -> Result<usize> {
    let x = integer_point(x)?;
    let terms = signed_terms(family, &x, cap + 1)?;
    Ok(scan_truncation(&terms, cap))
}

/// Determines the summation constant empirically: the exact direct sum of
/// the first `n` terms minus the optimally truncated tail at `x = n`.
///
/// The returned `value` is the direct sum the constant was anchored to.
pub fn determine_constant(
    family: &PoleTermFamily,
    n: u64,
    options: &SummationOptions,
) -> Result<SummationResult> {
    let x = integer_point(n)?;
    let mut direct = Rational::zero();
    for v in 1..=n {
        direct += family.evaluate(&Rational::from_integer(BigInt::from(v)))?;
    }
    let tail = TailEvaluation::assemble(family, &x, options.max_terms + 1, options.digits)?;
    let k = scan_truncation(&tail.terms, options.max_terms);
    let estimate = Real::from_rational(&rat_abs(&tail.terms[k]), options.work());
    let constant = Real::from_rational(&direct, options.work())
        .sub(&tail.value_at_work(k))
        .rescale(options.digits);
    Ok(SummationResult {
        constant,
        value: Real::from_rational(&direct, options.digits),
        truncation_k: k,
        error_estimate: estimate,
        n,
        digits: options.digits,
    })
}

/// Partial sum at `x` from a previously determined constant: the constant
/// plus the optimally truncated tail.
pub fn partial_sum(
    family: &PoleTermFamily,
    constant: &Real,
    x: u64,
    options: &SummationOptions,
) -> Result<SummationResult> {
    let point = integer_point(x)?;
    let tail = TailEvaluation::assemble(family, &point, options.max_terms + 1, options.digits)?;
    let k = scan_truncation(&tail.terms, options.max_terms);
    let estimate = Real::from_rational(&rat_abs(&tail.terms[k]), options.work());
    let value = constant
        .rescale(options.work())
        .add(&tail.value_at_work(k))
        .rescale(options.digits);
    Ok(SummationResult {
        constant: constant.rescale(options.digits),
        value,
        truncation_k: k,
        error_estimate: estimate,
        n: x,
        digits: options.digits,
    })
}

/// Limit of the partial sums, if it exists.
///
/// As `x` grows the half term, the derivative terms, and the algebraic part
/// of the integral all vanish. The logarithm part
/// `sum of w_i ln(a_i x + b_i)` behaves like `(sum of w_i) ln x +
/// sum of w_i ln a_i`: the partial sums converge exactly when the weights
/// `w_i = c_i/a_i` of the order-1 terms cancel, and then the limit is the
/// constant plus the residual `sum of w_i ln a_i` (which is itself zero for
/// every family whose order-1 slopes are equal, the telescoping case).
pub fn infinite_sum(family: &PoleTermFamily, constant: &Real) -> InfiniteSum {
    let mut weight_sum = Rational::zero();
    for term in family.terms() {
        if term.order() == 1 {
            weight_sum += term.coeff() / term.slope();
        }
    }
    if !weight_sum.is_zero() {
        return InfiniteSum::Divergent;
    }
    let work = constant.scale() + GUARD_DIGITS;
    let mut residual = Real::zero(work);
    for term in family.terms() {
        if term.order() == 1 {
            let weight = term.coeff() / term.slope();
            let log = ln_rational(term.slope(), work).expect("slope is positive");
            residual = residual.add(&log.mul_rational(&weight));
        }
    }
    InfiniteSum::Convergent(constant.rescale(work).add(&residual).rescale(constant.scale()))
}
