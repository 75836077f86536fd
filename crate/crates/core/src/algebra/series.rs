use std::fmt;

use super::{AlgebraError, Laurent, Monomial, Rational};

/// A Laurent polynomial known exactly modulo `q^(order+1)`.
///
/// Every stored `q`-exponent lies in `0..=order`; `x`-exponents may be
/// negative. Equality is termwise and includes the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: u32,
    poly: Laurent,
}

impl TruncatedSeries {
    /// Truncates `poly` at `order`. Negative `q`-exponents are rejected.
    pub fn new(poly: Laurent, order: u32) -> Result<Self, AlgebraError> {
        if let Some((lo, _)) = poly.q_range() {
            if lo < 0 {
                return Err(AlgebraError::NegativeQExponent { q_exp: lo });
            }
        }
        Ok(Self { order, poly: poly.truncate_q(i64::from(order)) })
    }

    pub fn one(order: u32) -> Self {
        Self { order, poly: Laurent::one() }
    }

    pub fn zero(order: u32) -> Self {
        Self { order, poly: Laurent::zero() }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn poly(&self) -> &Laurent {
        &self.poly
    }

    pub fn into_poly(self) -> Laurent {
        self.poly
    }

    pub fn coeff(&self, q_exp: i64, x_exp: i64) -> Rational {
        self.poly.coeff(q_exp, x_exp)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<(), AlgebraError> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
        self.check_order(other)?;
        Ok(Self { order: self.order, poly: &self.poly + &other.poly })
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
        self.check_order(other)?;
        Ok(Self { order: self.order, poly: &self.poly - &other.poly })
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
        self.check_order(other)?;
        let order = i64::from(self.order);
        // Discard high-order terms of each operand early: with nonnegative
        // q-exponents nothing above `order - min_q(other)` can survive.
        let lo_a = self.poly.q_range().map_or(0, |r| r.0);
        let lo_b = other.poly.q_range().map_or(0, |r| r.0);
        let a = self.poly.truncate_q(order - lo_b);
        let b = other.poly.truncate_q(order - lo_a);
        Ok(Self { order: self.order, poly: (&a * &b).truncate_q(order) })
    }

    /// `self * (1 - m)` for a monomial with nonnegative `q`-exponent.
    pub fn mul_one_minus(&self, m: &Monomial) -> Result<TruncatedSeries, AlgebraError> {
        if m.q_exp() < 0 {
            return Err(AlgebraError::NegativeQExponent { q_exp: m.q_exp() });
        }
        let order = i64::from(self.order);
        let shifted = self.poly.truncate_q(order - m.q_exp()).mul_monomial(m);
        Ok(Self { order: self.order, poly: &self.poly - &shifted })
    }

    /// Substitutes a rational value for `x`.
    pub fn specialize_x(&self, x0: &Rational) -> Result<TruncatedSeries, AlgebraError> {
        Ok(Self { order: self.order, poly: self.poly.specialize_x(x0)? })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.poly, self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(c, a, b)| ((a, b), rat(c))))
    }

    #[test]
    fn mul_examples() {
        let a = poly(&[(1, 0, 0), (-1, 0, 1)]);
        let b = poly(&[(1, 0, 0), (-1, 1, 1)]);
        let t1 = TruncatedSeries::new(a.clone(), 1).unwrap().mul(&TruncatedSeries::new(b.clone(), 1).unwrap()).unwrap();
        assert_eq!(t1.poly(), &poly(&[(1, 0, 0), (-1, 0, 1), (-1, 1, 1), (1, 1, 2)]));
        let t0 = TruncatedSeries::new(a.clone(), 0).unwrap().mul(&TruncatedSeries::new(b, 0).unwrap()).unwrap();
        assert_eq!(t0.poly(), &a);
        let s = TruncatedSeries::new(a, 3).unwrap();
        assert_eq!(s.mul(&TruncatedSeries::one(3)).unwrap(), s);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            TruncatedSeries::new(poly(&[(1, -1, 0)]), 3).unwrap_err(),
            AlgebraError::NegativeQExponent { q_exp: -1 }
        );
        assert_eq!(
            TruncatedSeries::one(2).mul(&TruncatedSeries::one(3)).unwrap_err(),
            AlgebraError::OrderMismatch { left: 2, right: 3 }
        );
    }

    fn arb_nonneg_poly() -> impl Strategy<Value = Laurent> {
        prop::collection::vec((-4i64..=4, 0i64..=6, -3i64..=3), 0..10)
            .prop_map(|ts| Laurent::from_terms(ts.into_iter().map(|(c, a, b)| ((a, b), rat(c)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn truncation_commutes_with_product(a in arb_nonneg_poly(), b in arb_nonneg_poly(), t in 0u32..8) {
            let full = TruncatedSeries::new(&a * &b, t).unwrap();
            let ta = TruncatedSeries::new(a, t).unwrap();
            let tb = TruncatedSeries::new(b, t).unwrap();
            prop_assert_eq!(ta.mul(&tb).unwrap(), full);
        }
    }
}
