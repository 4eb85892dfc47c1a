//! Exact Euler-Maclaurin summation engine.
//!
//! Everything here computes with exact arithmetic: arbitrary-precision
//! rationals for series terms, coefficients and polynomials, and a
//! fixed-point decimal type for the values that are inherently
//! transcendental (logarithms and the summation constants built from them).
//! Rounding happens once, at a caller-chosen decimal scale.
//!
//! Module map:
//!
//! - [`rational`]: exact fraction arithmetic and parsing helpers.
//! - [`real`]: fixed-point decimals at scale `D` and the natural logarithm.
//! - [`coefficients`]: the inversion-recurrence coefficient table and its
//!   Bernoulli-number cross-check.
//! - [`polynomial`]: dense rational polynomials, Taylor shift, Newton
//!   refinement and the derivative-series antiderivative.
//! - [`faulhaber`]: closed-form power-sum polynomials.
//! - [`pole`]: families of simple-pole terms `c/(a x + b)^p` with exact
//!   derivatives and antiderivatives.
//! - [`summation`]: asymptotic tail evaluation, optimal truncation, and
//!   summation constants determined from exact partial sums.
//! - [`pipelines`]: named high-precision constants (Euler-Mascheroni, zeta
//!   values, the alternating odd-reciprocal series) with reference digits.

pub mod coefficients;
pub mod error;
pub mod faulhaber;
pub mod pipelines;
pub mod pole;
pub mod polynomial;
pub mod rational;
pub mod real;
pub mod summation;

pub use coefficients::{bernoulli, coefficient_decimal, EmCoefficientTable};
pub use error::{Error, Result};
pub use faulhaber::{power_sum, PowerSumPolynomial};
pub use pipelines::{
    euler_mascheroni, harmonic_partial, harmonic_table, leibniz_pi, odd_harmonic_constant,
    zeta_int, NamedConstantReport,
};
pub use pole::{PoleTerm, PoleTermFamily};
pub use polynomial::{NewtonState, RationalPolynomial};
pub use rational::{rat, Rational};
pub use real::Real;
pub use summation::{
    determine_constant, em_tail, infinite_sum, optimal_truncation, partial_sum, InfiniteSum,
    SummationOptions, SummationResult, TailEvaluation,
};
