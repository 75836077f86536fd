use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rational};

/// A single term `coeff * q^q_exp * x^x_exp` with a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    coeff: Rational,
    q_exp: i64,
    x_exp: i64,
}

impl Monomial {
    pub fn new(coeff: Rational, q_exp: i64, x_exp: i64) -> Result<Self, AlgebraError> {
        if coeff.is_zero() {
            return Err(AlgebraError::ZeroCoefficient);
        }
        Ok(Self { coeff, q_exp, x_exp })
    }

    /// `q^q_exp * x^x_exp` with coefficient one.
    pub fn unit(q_exp: i64, x_exp: i64) -> Self {
        Self { coeff: Rational::one(), q_exp, x_exp }
    }

    /// `-q^q_exp * x^x_exp`.
    pub fn neg_unit(q_exp: i64, x_exp: i64) -> Self {
        Self { coeff: -Rational::one(), q_exp, x_exp }
    }

    pub fn one() -> Self {
        Self::unit(0, 0)
    }

    pub fn q() -> Self {
        Self::unit(1, 0)
    }

    pub fn x() -> Self {
        Self::unit(0, 1)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn q_exp(&self) -> i64 {
        self.q_exp
    }

    pub fn x_exp(&self) -> i64 {
        self.x_exp
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: &self.coeff * &other.coeff,
            q_exp: self.q_exp + other.q_exp,
            x_exp: self.x_exp + other.x_exp,
        }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { coeff: self.coeff.recip(), q_exp: -self.q_exp, x_exp: -self.x_exp }
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: i64) -> Monomial {
        Monomial { coeff: self.coeff.clone(), q_exp: self.q_exp + k, x_exp: self.x_exp }
    }

    pub fn neg(&self) -> Monomial {
        Monomial { coeff: -&self.coeff, q_exp: self.q_exp, x_exp: self.x_exp }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial {
            coeff: self.coeff.pow(k),
            q_exp: self.q_exp * i64::from(k),
            x_exp: self.x_exp * i64::from(k),
        }
    }

    pub fn is_one(&self) -> bool {
        self.q_exp == 0 && self.x_exp == 0 && self.coeff.is_one()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let abs = self.coeff.abs();
        if !abs.is_one() || (self.q_exp == 0 && self.x_exp == 0) {
            parts.push(abs.to_string());
        }
        for (name, e) in [("q", self.q_exp), ("x", self.x_exp)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if self.coeff.is_negative() {
            write!(f, "-")?;
        }
        write!(f, "{}", parts.join("*"))
    }
}
