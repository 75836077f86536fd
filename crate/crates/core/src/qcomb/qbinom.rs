use crate::algebra::{Laurent, Monomial};

/// Gaussian binomial coefficients built row by row from the Pascal
/// recurrence `[m, k] = [m-1, k-1] + q^k [m-1, k]`.
///
/// Rows are memoized inside the value, so each table is owned by one
/// computation; share it across threads only behind your own lock.
#[derive(Clone, Debug)]
pub struct QBinomials {
    rows: Vec<Vec<Laurent>>,
}

impl Default for QBinomials {
    fn default() -> Self {
        Self::new()
    }
}

impl QBinomials {
    pub fn new() -> Self {
        Self { rows: vec![vec![Laurent::one()]] }
    }

    fn extend_to(&mut self, m: usize) {
        while self.rows.len() <= m {
            let prev = self.rows.last().expect("row 0 is always present");
            let n = prev.len();
            let mut row = Vec::with_capacity(n + 1);
            row.push(Laurent::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k].mul_monomial(&Monomial::unit(k as i64, 0)));
            }
            row.push(Laurent::one());
            self.rows.push(row);
        }
    }

    /// Row `m`, i.e. `[m, 0] ..= [m, m]`.
    pub fn row(&mut self, m: u32) -> &[Laurent] {
        self.extend_to(m as usize);
        &self.rows[m as usize]
    }

    /// `[m, k]_q`; zero when `k < 0` or `k > m`.
    pub fn get(&mut self, m: u32, k: i64) -> Laurent {
        if k < 0 || k > i64::from(m) {
            return Laurent::zero();
        }
        self.row(m)[k as usize].clone()
    }
}

/// `[m, k]_q` from a fresh table.
pub fn qbinom(m: u32, k: i64) -> Laurent {
    QBinomials::new().get(m, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};
    use crate::qcomb::poch_poly;
    use num_integer::binomial;
    use num_traits::Zero;

    fn q_poly(coeffs: &[i64]) -> Laurent {
        Laurent::from_terms(coeffs.iter().enumerate().map(|(i, &c)| ((i as i64, 0), rat(c))))
    }

    #[test]
    fn examples() {
        for m in 0..6 {
            assert!(qbinom(m, 0).is_one());
        }
        assert_eq!(qbinom(2, 1), q_poly(&[1, 1]));
        assert_eq!(qbinom(4, 2), q_poly(&[1, 1, 2, 1, 1]));
        assert!(qbinom(3, -1).is_zero());
        assert!(qbinom(3, 4).is_zero());
    }

    #[test]
    fn matches_factorial_ratio() {
        // (q;q)_m == [m,k] (q;q)_k (q;q)_{m-k}, a division-free oracle.
        let q = Monomial::q();
        for m in 0..=9u32 {
            for k in 0..=m {
                let lhs = poch_poly(&q, m);
                let rhs = &(&qbinom(m, i64::from(k)) * &poch_poly(&q, k)) * &poch_poly(&q, m - k);
                assert_eq!(lhs, rhs, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn symmetry_recurrences_degree_and_classical_limit() {
        let mut t = QBinomials::new();
        for m in 0..=12u32 {
            for k in 0..=i64::from(m) {
                let b = t.get(m, k);
                assert_eq!(b, t.get(m, i64::from(m) - k));
                assert!(b.terms().iter().all(|((_, x), _)| *x == 0));
                assert_eq!(b.q_range().unwrap().1, k * (i64::from(m) - k));
                let at_one: Rational = b.terms().iter().fold(Rational::zero(), |acc, (_, c)| acc + c);
                assert_eq!(at_one, rat(binomial(i64::from(m), k)));
                if m > 0 {
                    let qk = Monomial::unit(k, 0);
                    let first = &t.get(m - 1, k - 1) + &t.get(m - 1, k).mul_monomial(&qk);
                    assert_eq!(b, first);
                    let qmk = Monomial::unit(i64::from(m) - k, 0);
                    let mirrored = &t.get(m - 1, k - 1).mul_monomial(&qmk) + &t.get(m - 1, k);
                    assert_eq!(b, mirrored);
                }
            }
        }
    }
}
