use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Rational;

/// Maximum draws per trial before a sampling check gives up.
pub const RESAMPLE_BUDGET: u32 = 100;

/// An evaluation point for `q`, `x` and the free parameter `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    pub q: Rational,
    pub x: Rational,
    pub m_param: Rational,
}

impl fmt::Display for SamplePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(q={}, x={}, M={})", self.q, self.x, self.m_param)
    }
}

/// Deterministic source of sample rationals: numerator uniform in
/// `[-9, 9] \ {0}`, denominator uniform in `[2, 9]`.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    /// Independent stream `stream` of the generator seeded by `seed`.
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng }
    }

    pub fn rational(&mut self) -> Rational {
        let mut num = self.rng.gen_range(-9i64..=8);
        if num >= 0 {
            num += 1;
        }
        let den = self.rng.gen_range(2i64..=9);
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    /// A `q` value different from `0`, `1` and `-1`.
    pub fn q_value(&mut self) -> Rational {
        loop {
            let q = self.rational();
            if !q.abs().is_one() {
                return q;
            }
        }
    }

    pub fn point(&mut self) -> SamplePoint {
        SamplePoint { q: self.q_value(), x: self.rational(), m_param: self.rational() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn draws_stay_in_range_and_repeat() {
        let mut a = Sampler::new(42, 3);
        let mut b = Sampler::new(42, 3);
        for _ in 0..500 {
            let r = a.rational();
            assert_eq!(r, b.rational());
            assert!(!r.is_zero());
            assert!(r.abs() <= Rational::from_integer(BigInt::from(9)) / BigInt::from(2));
            let q = a.q_value();
            b.q_value();
            assert!(!q.abs().is_one());
        }
        assert_ne!(Sampler::new(42, 0).point(), Sampler::new(42, 1).point());
    }
}
