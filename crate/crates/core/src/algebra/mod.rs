//! Exact sparse arithmetic over the rationals in two variables `q` and `x`.
//!
//! Three value types live here:
//!
//! - [`Laurent`]: a finite sum of monomials `c * q^a * x^b` with `a, b` any
//!   integers, always stored in canonical form (sorted by `(a, b)`, no zero
//!   coefficients), so structural equality is mathematical equality.
//! - [`RationalFunction`]: a quotient of two Laurent polynomials. It is never
//!   reduced; equality is decided by cross-multiplication.
//! - [`TruncatedSeries`]: a Laurent polynomial whose `q`-exponents lie in
//!   `0..=T`, used for expansions of infinite products modulo `q^(T+1)`.

mod laurent;
mod monomial;
mod rational_function;
mod series;

pub use laurent::{Exponents, Laurent};
pub use monomial::Monomial;
pub use rational_function::RationalFunction;
pub use series::TruncatedSeries;

pub(crate) use laurent::power as laurent_power;

use num_bigint::BigInt;
use thiserror::Error;

/// Coefficient domain: arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("monomial coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("rational function denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("cannot invert the zero rational function")]
    DivisionByZero,
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("truncated series cannot hold the negative q-exponent {q_exp}")]
    NegativeQExponent { q_exp: i64 },
    #[error("cannot raise zero to the negative power {exponent} (variable {variable})")]
    ZeroToNegativePower { variable: char, exponent: i64 },
    #[error("exponent {0} is out of range for evaluation")]
    ExponentOverflow(i64),
    #[error("denominator vanishes at the evaluation point")]
    Pole,
}
