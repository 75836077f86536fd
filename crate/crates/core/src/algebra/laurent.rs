use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Monomial, Rational};

/// Exponent pair `(q_exp, x_exp)`; the sort key of every term.
pub type Exponents = (i64, i64);

/// Below this many terms a multiplicand is applied as a sequence of shifted
/// merges instead of a hashed convolution.
const MERGE_MUL_THRESHOLD: usize = 4;

/// A bivariate Laurent polynomial in `q` and `x` with rational coefficients.
///
/// Terms are kept sorted by `(q_exp, x_exp)` with no zero coefficients, so
/// the derived `PartialEq` is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: Vec<(Exponents, Rational)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn term(c: Rational, q_exp: i64, x_exp: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![((q_exp, x_exp), c)] }
        }
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        Self { terms: vec![((m.q_exp(), m.x_exp()), m.coeff().clone())] }
    }

    /// `1 - m`, the generic q-shifted factorial factor.
    pub fn one_minus(m: &Monomial) -> Self {
        Self::one() - Self::from_monomial(m)
    }

    /// Builds a canonical polynomial from arbitrary terms; repeated keys are
    /// summed and zero results dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut raw: Vec<(Exponents, Rational)> = terms.into_iter().collect();
        raw.sort_by_key(|t| t.0);
        let mut out: Vec<(Exponents, Rational)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match out.last_mut() {
                Some((last, acc)) if *last == e => *acc += c,
                _ => {
                    if let Some((_, acc)) = out.last() {
                        if acc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some((_, acc)) = out.last() {
            if acc.is_zero() {
                out.pop();
            }
        }
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(Exponents, Rational)] {
        &self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, q_exp: i64, x_exp: i64) -> Rational {
        match self.terms.binary_search_by(|(e, _)| e.cmp(&(q_exp, x_exp))) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Smallest and largest `q`-exponent, or `None` for the zero polynomial.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        Some((self.terms.first()?.0 .0, self.terms.last()?.0 .0))
    }

    /// Smallest and largest `x`-exponent, or `None` for the zero polynomial.
    pub fn x_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.iter().map(|(e, _)| e.1).min()?;
        let hi = self.terms.iter().map(|(e, _)| e.1).max()?;
        Some((lo, hi))
    }

    pub fn neg(&self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scale(&self, k: &Rational) -> Laurent {
        if k.is_zero() {
            return Laurent::zero();
        }
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Multiplication by a single monomial; preserves term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Laurent {
        let (dq, dx) = (m.q_exp(), m.x_exp());
        let k = m.coeff();
        let one = k.is_one();
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + dq, b + dx), if one { c.clone() } else { c * k }))
                .collect(),
        }
    }

    /// `self * (1 - m)` computed as a single linear merge.
    pub fn mul_one_minus(&self, m: &Monomial) -> Laurent {
        merge(&self.terms, &self.mul_monomial(m).terms, true)
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        merge(&self.terms, &other.terms, false)
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        merge(&self.terms, &other.terms, true)
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() <= MERGE_MUL_THRESHOLD {
            let mut acc = Laurent::zero();
            for ((a, b), c) in &small.terms {
                let m = Monomial::new(c.clone(), *a, *b).expect("canonical terms are nonzero");
                acc = acc.add(&big.mul_monomial(&m));
            }
            return acc;
        }
        let mut acc: HashMap<Exponents, Rational> = HashMap::with_capacity(big.len() * 2);
        for ((a1, b1), c1) in &small.terms {
            for ((a2, b2), c2) in &big.terms {
                let p = c1 * c2;
                match acc.get_mut(&(a1 + a2, b1 + b2)) {
                    Some(v) => *v += p,
                    None => {
                        acc.insert((a1 + a2, b1 + b2), p);
                    }
                }
            }
        }
        Laurent::from_terms(acc)
    }

    pub fn pow(&self, k: u32) -> Laurent {
        (0..k).fold(Laurent::one(), |acc, _| acc.mul(self))
    }

    /// Drops every term whose `q`-exponent exceeds `order`.
    pub fn truncate_q(&self, order: i64) -> Laurent {
        let end = self.terms.partition_point(|(e, _)| e.0 <= order);
        Laurent { terms: self.terms[..end].to_vec() }
    }

    /// Substitutes the rational value `x0` for `x`, leaving a polynomial in
    /// `q` alone.
    pub fn specialize_x(&self, x0: &Rational) -> Result<Laurent, AlgebraError> {
        let mut out = Vec::with_capacity(self.terms.len());
        for ((a, b), c) in &self.terms {
            out.push(((*a, 0), c * power(x0, *b, 'x')?));
        }
        Ok(Laurent::from_terms(out))
    }

    /// Exact value at `q = q0`, `x = x0`.
    pub fn eval(&self, q0: &Rational, x0: &Rational) -> Result<Rational, AlgebraError> {
        let mut q_pows: HashMap<i64, Rational> = HashMap::new();
        let mut x_pows: HashMap<i64, Rational> = HashMap::new();
        let mut sum = Rational::zero();
        for ((a, b), c) in &self.terms {
            if !q_pows.contains_key(a) {
                q_pows.insert(*a, power(q0, *a, 'q')?);
            }
            if !x_pows.contains_key(b) {
                x_pows.insert(*b, power(x0, *b, 'x')?);
            }
            sum += c * &q_pows[a] * &x_pows[b];
        }
        Ok(sum)
    }

    /// First key, in sorted exponent order, where the two polynomials differ,
    /// with the coefficient on each side.
    pub fn first_difference(&self, other: &Laurent) -> Option<(Exponents, Rational, Rational)> {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(l), Some(r)) => l.0.cmp(&r.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => return Some((a[i].0, a[i].1.clone(), Rational::zero())),
                Ordering::Greater => return Some((b[j].0, Rational::zero(), b[j].1.clone())),
                Ordering::Equal => {
                    if a[i].1 != b[j].1 {
                        return Some((a[i].0, a[i].1.clone(), b[j].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        None
    }
}

pub(crate) fn power(base: &Rational, e: i64, variable: char) -> Result<Rational, AlgebraError> {
    if e < 0 && base.is_zero() {
        return Err(AlgebraError::ZeroToNegativePower { variable, exponent: e });
    }
    let e32 = i32::try_from(e).map_err(|_| AlgebraError::ExponentOverflow(e))?;
    Ok(base.pow(e32))
}

fn merge(a: &[(Exponents, Rational)], b: &[(Exponents, Rational)], negate_b: bool) -> Laurent {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, if negate_b { -&b[j].1 } else { b[j].1.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(e, c)| (*e, if negate_b { -c } else { c.clone() })));
    Laurent { terms: out }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Laurent> for &Laurent {
            type Output = Laurent;
            fn $method(self, rhs: &Laurent) -> Laurent {
                Laurent::$method(self, rhs)
            }
        }
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                Laurent::$method(&self, &rhs)
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: &Laurent) -> Laurent {
                Laurent::$method(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent::neg(&self)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent::neg(self)
    }
}

impl From<Monomial> for Laurent {
    fn from(m: Monomial) -> Self {
        Laurent::from_monomial(&m)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let m = Monomial::new(c.abs(), *a, *b).expect("canonical terms are nonzero");
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-{m}")?,
                (0, false) => write!(f, "{m}")?,
                (_, true) => write!(f, " - {m}")?,
                (_, false) => write!(f, " + {m}")?,
            }
        }
        Ok(())
    }
}
