use crate::algebra::{Monomial, TruncatedSeries};

use super::QError;

/// `[b_1, ..., b_r; q^d]_inf = (b_1; q^d)_inf ... (b_r; q^d)_inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    bases: Vec<Monomial>,
    modulus: u32,
}

impl ProductSpec {
    pub fn new(bases: Vec<Monomial>, modulus: u32) -> Result<Self, QError> {
        if modulus == 0 {
            return Err(QError::ZeroModulus);
        }
        if bases.is_empty() {
            return Err(QError::EmptyProduct);
        }
        Ok(Self { bases, modulus })
    }

    pub fn bases(&self) -> &[Monomial] {
        &self.bases
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }
}

/// `(base; q^d)_inf` modulo `q^(order+1)`.
///
/// Factor `j` is `1 - q^(d*j) * base`; it is kept iff its `q`-exponent is at
/// most `order`, every later factor being `1 + O(q^(order+1))`.
pub fn poch_inf(base: &Monomial, d: u32, order: u32) -> Result<TruncatedSeries, QError> {
    if d == 0 {
        return Err(QError::ZeroModulus);
    }
    if base.q_exp() < 0 {
        return Err(QError::InvalidBase { base: base.to_string(), reason: "negative q-exponent" });
    }
    if base.q_exp() == 0 && base.x_exp() == 0 {
        return Err(QError::InvalidBase {
            base: base.to_string(),
            reason: "a constant base has no formal infinite product",
        });
    }
    let mut out = TruncatedSeries::one(order);
    let mut factor = base.clone();
    while factor.q_exp() <= i64::from(order) {
        out = out.mul_one_minus(&factor)?;
        factor = factor.shift_q(i64::from(d));
    }
    Ok(out)
}

pub fn bracket_inf(spec: &ProductSpec, order: u32) -> Result<TruncatedSeries, QError> {
    let mut out = TruncatedSeries::one(order);
    for base in &spec.bases {
        out = out.mul(&poch_inf(base, spec.modulus, order)?)?;
    }
    Ok(out)
}
