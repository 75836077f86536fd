//! q-analogue building blocks: q-shifted factorials (finite, extended to
//! negative length, and truncated infinite), bracket products, Gaussian
//! binomials and exact evaluation of terminating basic hypergeometric sums.

mod hyper;
mod infinite;
mod pochhammer;
mod qbinom;

pub use hyper::{eval_poch, qhyper_eval, HyperMonomial, HyperSum};
pub use infinite::{bracket_inf, poch_inf, ProductSpec};
pub use pochhammer::{mul_poch, poch, poch_mod, poch_poly};
pub use qbinom::{qbinom, QBinomials};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("base {base} cannot be expanded as an infinite product: {reason}")]
    InvalidBase { base: String, reason: &'static str },
    #[error("product modulus must be at least 1")]
    ZeroModulus,
    #[error("a product needs at least one base")]
    EmptyProduct,
    #[error("evaluation point is inadmissible: {0}")]
    InadmissiblePoint(&'static str),
    #[error("pole: factor {factor} vanishes at k = {k}")]
    Pole { factor: String, k: u32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `k(k-1)/2`, i.e. the binomial coefficient `C(k, 2)` continued to all
/// integers by its polynomial formula.
pub fn tri(k: i64) -> i64 {
    k * (k - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::tri;

    #[test]
    fn tri_values() {
        assert_eq!(tri(0), 0);
        assert_eq!(tri(2), 1);
        assert_eq!(tri(-1), 1);
        assert_eq!(tri(-4), 10);
    }
}
