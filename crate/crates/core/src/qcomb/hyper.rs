use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{AlgebraError, Rational};

use super::QError;

/// `coeff * q^q_exp * x^x_exp * M^m_exp`, where `M` is a free parameter of a
/// hypergeometric sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperMonomial {
    pub coeff: Rational,
    pub q_exp: i64,
    pub x_exp: i64,
    pub m_exp: i64,
}

impl HyperMonomial {
    pub fn new(coeff: Rational, q_exp: i64, x_exp: i64, m_exp: i64) -> Self {
        Self { coeff, q_exp, x_exp, m_exp }
    }

    pub fn unit(q_exp: i64, x_exp: i64, m_exp: i64) -> Self {
        Self::new(Rational::one(), q_exp, x_exp, m_exp)
    }

    pub fn eval(&self, q0: &Rational, x0: &Rational, m0: &Rational) -> Result<Rational, AlgebraError> {
        Ok(&self.coeff
            * power(q0, self.q_exp, 'q')?
            * power(x0, self.x_exp, 'x')?
            * power(m0, self.m_exp, 'M')?)
    }
}

fn power(base: &Rational, e: i64, variable: char) -> Result<Rational, AlgebraError> {
    crate::algebra::laurent_power(base, e, variable)
}

impl fmt::Display for HyperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let abs = self.coeff.abs();
        let bare = self.q_exp == 0 && self.x_exp == 0 && self.m_exp == 0;
        if !abs.is_one() || bare {
            parts.push(abs.to_string());
        }
        for (name, e) in [("q", self.q_exp), ("x", self.x_exp), ("M", self.m_exp)] {
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

/// A terminating basic hypergeometric sum
/// `sum_{k=0}^{length} prod (a_i;q)_k / ((q;q)_k prod (b_j;q)_k) * z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperSum {
    pub num_bases: Vec<HyperMonomial>,
    pub den_bases: Vec<HyperMonomial>,
    pub argument: HyperMonomial,
    pub length: u32,
}

/// `prod_{j<n} (1 - a q^j)` at rational values.
pub fn eval_poch(a: &Rational, q: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut qj = Rational::one();
    for _ in 0..n {
        acc *= Rational::one() - a * &qj;
        qj *= q;
    }
    acc
}

/// Exact value of `h` at `q = q0`, `x = x0`, `M = m0`.
///
/// Terms are generated by their ratio
/// `t_{k+1} / t_k = z * prod (1 - a_i q^k) / ((1 - q^{k+1}) prod (1 - b_j q^k))`.
pub fn qhyper_eval(h: &HyperSum, q0: &Rational, x0: &Rational, m0: &Rational) -> Result<Rational, QError> {
    if q0.is_zero() || q0.abs().is_one() {
        return Err(QError::InadmissiblePoint("q must avoid 0, 1 and -1"));
    }
    let nums = h.num_bases.iter().map(|a| a.eval(q0, x0, m0)).collect::<Result<Vec<_>, _>>()?;
    let dens = h.den_bases.iter().map(|b| b.eval(q0, x0, m0)).collect::<Result<Vec<_>, _>>()?;
    let z = h.argument.eval(q0, x0, m0)?;

    let mut term = Rational::one();
    let mut sum = Rational::one();
    let mut qk = Rational::one();
    for k in 0..h.length {
        let q_next = &qk * q0;
        let mut den = Rational::one() - &q_next;
        if den.is_zero() {
            return Err(QError::Pole { factor: "(q;q)".to_string(), k: k + 1 });
        }
        for (b, base) in dens.iter().zip(&h.den_bases) {
            let f = Rational::one() - b * &qk;
            if f.is_zero() {
                return Err(QError::Pole { factor: format!("({base};q)"), k: k + 1 });
            }
            den *= f;
        }
        let mut num = z.clone();
        for a in &nums {
            num *= Rational::one() - a * &qk;
        }
        term = term * num / den;
        sum += &term;
        qk = q_next;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    /// q-Dixon sum with upper parameters x^2, -qx, q^-m, M, lower
    /// parameters -x, q^(1+m) x^2, q x^2 / M and argument q^(1+m) x / M.
    fn dixon(m: u32) -> HyperSum {
        let m = i64::from(m);
        HyperSum {
            num_bases: vec![
                HyperMonomial::unit(0, 2, 0),
                HyperMonomial::new(rat(-1), 1, 1, 0),
                HyperMonomial::unit(-m, 0, 0),
                HyperMonomial::unit(0, 0, 1),
            ],
            den_bases: vec![
                HyperMonomial::new(rat(-1), 0, 1, 0),
                HyperMonomial::unit(1 + m, 2, 0),
                HyperMonomial::unit(1, 2, -1),
            ],
            argument: HyperMonomial::unit(1 + m, 1, -1),
            length: m as u32,
        }
    }

    #[test]
    fn empty_sum_is_one() {
        let h = dixon(0);
        assert_eq!(qhyper_eval(&h, &ratio(1, 2), &ratio(1, 3), &rat(2)).unwrap(), rat(1));
        assert_eq!(qhyper_eval(&h, &ratio(-7, 3), &ratio(5, 2), &ratio(-1, 9)).unwrap(), rat(1));
    }

    #[test]
    fn dixon_m1_against_direct_two_term_sum() {
        let (q, x, mm) = (ratio(1, 2), ratio(1, 3), rat(2));
        // k = 1 term written out by hand.
        let one = rat(1);
        let t1_num = (&one - &x * &x) * (&one + &q * &x) * (&one - q.recip()) * (&one - &mm);
        let t1_den = (&one - &q) * (&one + &x) * (&one - &q * &q * &x * &x) * (&one - &q * &x * &x / &mm);
        let direct = &one + t1_num / t1_den * (&q * &q * &x / &mm);
        // Right side (q x^2; q)_1 (q x / M; q)_1 / ((q x; q)_1 (q x^2 / M; q)_1).
        let rhs = (&one - &q * &x * &x) * (&one - &q * &x / &mm) / ((&one - &q * &x) * (&one - &q * &x * &x / &mm));
        let got = qhyper_eval(&dixon(1), &q, &x, &mm).unwrap();
        assert_eq!(got, direct);
        assert_eq!(got, rhs);
    }

    #[test]
    fn poles_and_bad_points() {
        // x = -1 makes the lower parameter -x equal to 1.
        match qhyper_eval(&dixon(2), &ratio(1, 2), &rat(-1), &rat(3)) {
            Err(QError::Pole { factor, k }) => {
                assert_eq!(factor, "(-x;q)");
                assert_eq!(k, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            qhyper_eval(&dixon(2), &rat(1), &ratio(1, 3), &rat(2)),
            Err(QError::InadmissiblePoint(_))
        ));
    }

    #[test]
    fn eval_poch_small() {
        assert_eq!(eval_poch(&rat(2), &ratio(1, 2), 0), rat(1));
        assert_eq!(eval_poch(&rat(2), &ratio(1, 2), 2), rat(0));
        assert_eq!(eval_poch(&rat(2), &ratio(1, 3), 2), ratio(-1, 3));
    }
}
