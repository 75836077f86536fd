use std::fmt;

use super::{AlgebraError, Laurent, Rational};

/// A quotient `num / den` of Laurent polynomials.
///
/// No common factors are ever cancelled. Two values are equal when
/// `a.num * b.den == b.num * a.den`.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Laurent,
    den: Laurent,
}

impl RationalFunction {
    pub fn new(num: Laurent, den: Laurent) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(num: Laurent) -> Self {
        Self { num, den: Laurent::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(Laurent::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Laurent::one())
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    pub fn den(&self) -> &Laurent {
        &self.den
    }

    pub fn into_parts(self) -> (Laurent, Laurent) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        if self.den == other.den {
            return Self { num: &self.num + &other.num, den: self.den.clone() };
        }
        Self {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn neg(&self) -> RationalFunction {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        Self { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn mul_poly(&self, p: &Laurent) -> RationalFunction {
        Self { num: &self.num * p, den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<RationalFunction, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self { num: self.den.clone(), den: self.num.clone() })
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    /// The two cross products `(self.num * other.den, other.num * self.den)`
    /// whose equality decides `self == other`.
    pub fn cross_products(&self, other: &RationalFunction) -> (Laurent, Laurent) {
        (&self.num * &other.den, &other.num * &self.den)
    }

    pub fn eval(&self, q0: &Rational, x0: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(q0, x0)?;
        if num_traits::Zero::is_zero(&d) {
            return Err(AlgebraError::Pole);
        }
        Ok(self.num.eval(q0, x0)? / d)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let (l, r) = self.cross_products(other);
        l == r
    }
}

impl From<Laurent> for RationalFunction {
    fn from(p: Laurent) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(c, a, b)| ((a, b), rat(c))))
    }

    fn rf(num: &[(i64, i64, i64)], den: &[(i64, i64, i64)]) -> RationalFunction {
        RationalFunction::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(Laurent::one(), Laurent::zero()).unwrap_err(),
            AlgebraError::ZeroDenominator
        );
        assert_eq!(RationalFunction::zero().inv().unwrap_err(), AlgebraError::DivisionByZero);
    }

    #[test]
    fn add_examples() {
        let one_minus_x = [(1, 0, 0), (-1, 0, 1)];
        let sum = rf(&[(1, 0, 1)], &one_minus_x).add(&RationalFunction::one());
        assert_eq!(sum, rf(&[(1, 0, 0)], &one_minus_x));

        let a = rf(&[(2, 1, 0)], &one_minus_x);
        let c = rf(&[(3, 0, 2)], &one_minus_x);
        let s = a.add(&c);
        assert_eq!(s.den(), &poly(&one_minus_x));
        assert_eq!(s.num(), &poly(&[(2, 1, 0), (3, 0, 2)]));

        let z = rf(&[(1, 0, 0)], &one_minus_x).add(&rf(&[(-1, 0, 0)], &one_minus_x));
        assert!(z.is_zero());
        assert_eq!(z, RationalFunction::zero());
    }

    #[test]
    fn eq_examples() {
        assert_eq!(rf(&[(1, 0, 0), (-1, 0, 2)], &[(1, 0, 0), (-1, 0, 1)]), rf(&[(1, 0, 0), (1, 0, 1)], &[(1, 0, 0)]));
        let den = poly(&[(1, 0, 0), (-1, 1, 2)]) * poly(&[(1, 0, 0), (1, 1, 0)]);
        let lhs = RationalFunction::new(poly(&[(1, 0, 0), (1, 1, 0)]), den).unwrap();
        assert_eq!(lhs, rf(&[(1, 0, 0)], &[(1, 0, 0), (-1, 1, 2)]));
        assert_ne!(rf(&[(1, 0, 1)], &[(1, 0, 0)]), rf(&[(1, 1, 0)], &[(1, 0, 0)]));
    }

    #[test]
    fn eval_detects_pole() {
        let f = rf(&[(1, 0, 0)], &[(1, 0, 0), (-1, 0, 1)]);
        assert_eq!(f.eval(&ratio(1, 2), &rat(1)), Err(AlgebraError::Pole));
        assert_eq!(f.eval(&ratio(1, 2), &rat(3)).unwrap(), ratio(-1, 2));
    }

    fn arb_poly() -> impl Strategy<Value = Laurent> {
        prop::collection::vec((-3i64..=3, -2i64..=2, -2i64..=2), 0..5)
            .prop_map(|ts| Laurent::from_terms(ts.into_iter().map(|(c, a, b)| ((a, b), rat(c)))))
    }

    fn arb_nonzero() -> impl Strategy<Value = Laurent> {
        arb_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn equality_is_an_equivalence(n in arb_poly(), d in arb_nonzero(), k in arb_nonzero(), n2 in arb_poly(), d2 in arb_nonzero()) {
            let a = RationalFunction::new(n.clone(), d.clone()).unwrap();
            let b = RationalFunction::new(&n * &k, &d * &k).unwrap();
            let c = RationalFunction::new(&(&n * &k) * &k, &(&d * &k) * &k).unwrap();
            let other = RationalFunction::new(n2, d2).unwrap();
            prop_assert!(a == a);
            prop_assert!(a == b && b == a);
            prop_assert!(b == c && a == c);
            prop_assert_eq!(a == other, other == a);
        }

        #[test]
        fn add_then_sub_round_trips(n in arb_poly(), d in arb_nonzero(), n2 in arb_poly(), d2 in arb_nonzero()) {
            let a = RationalFunction::new(n, d).unwrap();
            let b = RationalFunction::new(n2, d2).unwrap();
            prop_assert!(a.add(&b).sub(&b) == a);
        }
    }
}
