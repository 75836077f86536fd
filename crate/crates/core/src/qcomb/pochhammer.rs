use crate::algebra::{AlgebraError, Laurent, Monomial, RationalFunction};

/// `(base; q^d)_n = prod_{j<n} (1 - q^(d*j) * base)`, built factor by factor
/// on top of `p`.
pub fn mul_poch(p: &Laurent, base: &Monomial, n: u32, d: u32) -> Laurent {
    let step = i64::from(d);
    let mut out = p.clone();
    for j in 0..i64::from(n) {
        out = out.mul_one_minus(&base.shift_q(step * j));
    }
    out
}

/// `(base; q)_n` for `n >= 0` as a polynomial.
pub fn poch_poly(base: &Monomial, n: u32) -> Laurent {
    mul_poch(&Laurent::one(), base, n, 1)
}

/// `(base; q^d)_n` for `n >= 0`.
pub fn poch_mod(base: &Monomial, n: u32, d: u32) -> Laurent {
    mul_poch(&Laurent::one(), base, n, d)
}

/// The q-shifted factorial `(base; q)_n` for any integer `n`.
///
/// Negative lengths follow `(a; q)_{-n} = 1 / (a q^{-n}; q)_n`. That
/// denominator vanishes when one of its factors is `1 - 1`, e.g. `(q; q)_{-1}`,
/// which is reported as [`AlgebraError::ZeroDenominator`].
pub fn poch(base: &Monomial, n: i64) -> Result<RationalFunction, AlgebraError> {
    let len = u32::try_from(n.unsigned_abs()).map_err(|_| AlgebraError::ExponentOverflow(n))?;
    if n >= 0 {
        Ok(RationalFunction::from_poly(poch_poly(base, len)))
    } else {
        RationalFunction::new(Laurent::one(), poch_poly(&base.shift_q(n), len))
    }
}
