use crate::algebra::{rat, Laurent, Monomial, Rational, RationalFunction};
use crate::qcomb::{eval_poch, mul_poch, poch, poch_poly, qhyper_eval, tri, HyperMonomial, HyperSum, QError};

use super::report::ReportBuilder;
use super::{IdentityId, Metrics, SamplePoint, Sampler, VerificationReport, VerifyError, Witness, RESAMPLE_BUDGET};

/// The terminating q-Dixon sum: upper parameters `x^2, -qx, q^{-m}, M`,
/// lower parameters `-x, q^{1+m} x^2, q x^2 / M`, argument `q^{1+m} x / M`.
pub fn qdixon_sum(m: u32) -> HyperSum {
    let mi = i64::from(m);
    HyperSum {
        num_bases: vec![
            HyperMonomial::unit(0, 2, 0),
            HyperMonomial::new(rat(-1), 1, 1, 0),
            HyperMonomial::unit(-mi, 0, 0),
            HyperMonomial::unit(0, 0, 1),
        ],
        den_bases: vec![
            HyperMonomial::new(rat(-1), 0, 1, 0),
            HyperMonomial::unit(1 + mi, 2, 0),
            HyperMonomial::unit(1, 2, -1),
        ],
        argument: HyperMonomial::unit(1 + mi, 1, -1),
        length: m,
    }
}

/// `(q x^2;q)_m (q x/M;q)_m / ((q x;q)_m (q x^2/M;q)_m)` at a point.
pub fn qdixon_rhs(m: u32, p: &SamplePoint) -> Result<Rational, QError> {
    let (q, x, big_m) = (&p.q, &p.x, &p.m_param);
    let qx = q * x;
    let qx2 = &qx * x;
    let num = eval_poch(&qx2, q, m) * eval_poch(&(&qx / big_m), q, m);
    let den_a = eval_poch(&qx, q, m);
    if num_traits::Zero::is_zero(&den_a) {
        return Err(QError::Pole { factor: "(q*x;q)".to_string(), k: m });
    }
    let den_b = eval_poch(&(&qx2 / big_m), q, m);
    if num_traits::Zero::is_zero(&den_b) {
        return Err(QError::Pole { factor: "(q*x^2*M^-1;q)".to_string(), k: m });
    }
    Ok(num / (den_a * den_b))
}

fn both_sides(m: u32, h: &HyperSum, p: &SamplePoint) -> Result<(Rational, Rational), QError> {
    let lhs = qhyper_eval(h, &p.q, &p.x, &p.m_param)?;
    let rhs = qdixon_rhs(m, p)?;
    Ok((lhs, rhs))
}

/// Draws admissible points with `draw` and compares both sides at each.
fn sampled_check(
    builder: ReportBuilder,
    m: u32,
    trials: u32,
    mut draw: impl FnMut() -> SamplePoint,
) -> Result<VerificationReport, VerifyError> {
    let h = qdixon_sum(m);
    let mut samples = Vec::with_capacity(trials as usize);
    let mut witness = None;
    for trial in 0..trials {
        let mut found = None;
        for _ in 0..RESAMPLE_BUDGET {
            let p = draw();
            if let Ok(values) = both_sides(m, &h, &p) {
                found = Some((p, values));
                break;
            }
        }
        let Some((p, (lhs, rhs))) = found else {
            return Err(VerifyError::ResampleBudgetExhausted { trial, budget: RESAMPLE_BUDGET });
        };
        if lhs != rhs && witness.is_none() {
            witness = Some(Witness::Sample { point: p.clone(), lhs, rhs });
        }
        samples.push(p);
    }
    let metrics = Metrics { terms: samples.len(), max_q_deg: 0, max_x_deg: 0, elapsed_ms: 0.0 };
    Ok(builder.finish(witness, metrics, samples))
}

/// Checks q-Dixon at `trials` pseudo-random admissible rational points.
/// Points where some denominator vanishes are redrawn and not counted.
pub fn verify_qdixon_sampled(m: u32, trials: u32, seed: u64) -> Result<VerificationReport, VerifyError> {
    let builder = ReportBuilder::new(IdentityId::QdixonSampled)
        .int("m", i64::from(m))
        .int("trials", i64::from(trials))
        .int("seed", seed as i64);
    let mut sampler = Sampler::new(seed, u64::from(m));
    sampled_check(builder, m, trials, || sampler.point())
}

/// q-Dixon with `M = q^{-power}` at `points` sampled `(q, x)` pairs.
pub fn verify_qdixon_specialized(m: u32, power: u32, points: u32, seed: u64) -> Result<VerificationReport, VerifyError> {
    let builder = ReportBuilder::new(IdentityId::QdixonSampled)
        .int("m", i64::from(m))
        .int("M_q_exp", -i64::from(power))
        .int("trials", i64::from(points))
        .int("seed", seed as i64);
    let mut sampler = Sampler::new(seed, (u64::from(power) << 32) | u64::from(m));
    sampled_check(builder, m, points, || {
        let q = sampler.q_value();
        let x = sampler.rational();
        let m_param = q.pow(-(power as i32));
        SamplePoint { q, x, m_param }
    })
}

/// Summand `k` of the `M -> inf` limit of q-Dixon:
/// `(x^2;q)_k (-qx;q)_k (q^{-m};q)_k / ((q;q)_k (-x;q)_k (q^{1+m}x^2;q)_k)
///  * (-1)^k q^{C(k,2)} (q^{1+m} x)^k`.
pub fn dixon_limit_summand(m: u32, k: u32) -> RationalFunction {
    let (mi, ki) = (i64::from(m), i64::from(k));
    let sign = if k.is_multiple_of(2) { Monomial::unit(tri(ki) + (1 + mi) * ki, ki) } else {
        Monomial::neg_unit(tri(ki) + (1 + mi) * ki, ki)
    };
    let mut num = Laurent::from_monomial(&sign);
    num = mul_poch(&num, &Monomial::unit(0, 2), k, 1);
    num = mul_poch(&num, &Monomial::neg_unit(1, 1), k, 1);
    num = mul_poch(&num, &Monomial::unit(-mi, 0), k, 1);
    let mut den = poch_poly(&Monomial::q(), k);
    den = mul_poch(&den, &Monomial::neg_unit(0, 1), k, 1);
    den = mul_poch(&den, &Monomial::unit(1 + mi, 2), k, 1);
    RationalFunction::new(num, den).expect("nonzero")
}

/// Sum of the limiting summands over the common denominator
/// `(q;q)_m (-x;q)_m (q^{1+m} x^2;q)_m`.
pub fn dixon_limit_sum(m: u32) -> RationalFunction {
    let mi = i64::from(m);
    let mut common = poch_poly(&Monomial::q(), m);
    common = mul_poch(&common, &Monomial::neg_unit(0, 1), m, 1);
    common = mul_poch(&common, &Monomial::unit(1 + mi, 2), m, 1);
    let mut sum = Laurent::zero();
    for k in 0..=m {
        let ki = i64::from(k);
        let (num, _) = dixon_limit_summand(m, k).into_parts();
        // Complete each denominator factor from length k to length m.
        let mut term = mul_poch(&num, &Monomial::unit(ki + 1, 0), m - k, 1);
        term = mul_poch(&term, &Monomial::neg_unit(ki, 1), m - k, 1);
        term = mul_poch(&term, &Monomial::unit(1 + mi + ki, 2), m - k, 1);
        sum = &sum + &term;
    }
    RationalFunction::new(sum, common).expect("nonzero")
}

fn limit_value(m: u32) -> RationalFunction {
    let num = poch(&Monomial::unit(1, 2), i64::from(m)).expect("nonneg length");
    let den = poch(&Monomial::unit(1, 1), i64::from(m)).expect("nonneg length");
    num.div(&den).expect("nonzero")
}

/// `dixon_limit_sum(m) == (q x^2;q)_m / (q x;q)_m`.
pub fn verify_dixon_limit(m: u32) -> VerificationReport {
    let builder = ReportBuilder::new(IdentityId::DixonLimit).int("m", i64::from(m));
    let (lhs, rhs) = dixon_limit_sum(m).cross_products(&limit_value(m));
    builder.compare(&lhs, &rhs)
}

/// Summand `k` of the finite quintuple form equals limiting q-Dixon summand
/// `k` divided by the limiting right side `(q x^2;q)_m / (q x;q)_m`.
pub fn verify_dixon_term_match(m: u32, k: u32) -> Result<VerificationReport, VerifyError> {
    if k > m {
        return Err(VerifyError::IndexOutOfRange { k: i64::from(k), lo: 0, hi: i64::from(m) });
    }
    let builder = ReportBuilder::new(IdentityId::DixonTermMatch).int("m", i64::from(m)).int("k", i64::from(k));
    let quint = super::finite_quintuple_summand(m, k);
    let scaled = dixon_limit_summand(m, k).div(&limit_value(m)).expect("nonzero");
    let (lhs, rhs) = quint.cross_products(&scaled);
    Ok(builder.compare(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn dixon_at_fixed_point() {
        let p = SamplePoint { q: ratio(1, 2), x: ratio(1, 3), m_param: rat(2) };
        for m in 0..=4 {
            let (l, r) = both_sides(m, &qdixon_sum(m), &p).unwrap();
            assert_eq!(l, r, "m={m}");
        }
        assert_eq!(qdixon_rhs(0, &p).unwrap(), rat(1));
    }

    #[test]
    fn sampled_runs_are_reproducible() {
        let a = verify_qdixon_sampled(3, 10, 42).unwrap();
        let b = verify_qdixon_sampled(3, 10, 42).unwrap();
        assert!(a.passed());
        assert_eq!(a.samples, b.samples);
        assert_eq!(a.samples.len(), 10);
        assert_ne!(a.samples, verify_qdixon_sampled(3, 10, 43).unwrap().samples);
    }

    #[test]
    fn specialized_m_parameter() {
        for power in 1..=3 {
            assert!(verify_qdixon_specialized(3, power, 5, 7).unwrap().passed());
        }
    }

    #[test]
    fn limit_small_cases() {
        assert_eq!(dixon_limit_sum(0), RationalFunction::one());
        let expected = RationalFunction::new(
            Laurent::one_minus(&Monomial::unit(1, 2)),
            Laurent::one_minus(&Monomial::unit(1, 1)),
        )
        .unwrap();
        assert_eq!(dixon_limit_sum(1), expected);
        assert!(verify_dixon_limit(4).passed());
    }

    #[test]
    fn limit_sum_matches_naive_accumulation() {
        for m in 0..=4 {
            let naive = (0..=m).fold(RationalFunction::zero(), |acc, k| acc.add(&dixon_limit_summand(m, k)));
            assert_eq!(naive, dixon_limit_sum(m));
        }
    }

    #[test]
    fn term_match_examples() {
        for m in 0..=3 {
            assert!(verify_dixon_term_match(m, 0).unwrap().passed());
        }
        assert!(verify_dixon_term_match(1, 1).unwrap().passed());
        // m=1, k=1: both sides equal (1+qx)(1-x)(1-qx) q x / ((1-q x^2)(1-q^2 x^2)).
        let one_minus = |a, b| Laurent::one_minus(&Monomial::unit(a, b));
        let num = &(&(&Laurent::one_minus(&Monomial::neg_unit(1, 1)) * &one_minus(0, 1)) * &one_minus(1, 1))
            * &Laurent::from_monomial(&Monomial::unit(1, 1));
        let hand = RationalFunction::new(num, &one_minus(1, 2) * &one_minus(2, 2)).unwrap();
        assert_eq!(super::super::finite_quintuple_summand(1, 1), hand);
        assert!(verify_dixon_term_match(1, 2).is_err());
    }
}
