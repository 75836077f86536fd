use crate::algebra::{Laurent, Monomial, RationalFunction};
use crate::qcomb::{mul_poch, poch, poch_poly, tri, QBinomials};

use super::report::ReportBuilder;
use super::{IdentityId, Mutation, VerificationReport, VerifyError};

fn x_squared() -> Monomial {
    Monomial::unit(0, 2)
}

/// `(a;q)_n` for a base involving `x`, which never has a pole.
fn poch_x(base: &Monomial, n: i64) -> RationalFunction {
    poch(base, n).expect("x-dependent bases give nonzero denominators")
}

/// Summand `k` of the finite form,
/// `(1 + x q^k) [m,k] (x;q)_{m+1} / (q^k x^2; q)_{m+1} * x^k q^{k^2}`,
/// built directly from its definition.
pub fn finite_quintuple_summand(m: u32, k: u32) -> RationalFunction {
    let ki = i64::from(k);
    let mut num = QBinomials::new().get(m, ki).mul_monomial(&Monomial::unit(ki * ki, ki));
    num = num.mul_one_minus(&Monomial::neg_unit(ki, 1));
    let num = mul_poch(&num, &Monomial::x(), m + 1, 1);
    let den = poch_poly(&Monomial::unit(ki, 2), m + 1);
    RationalFunction::new(num, den).expect("(q^k x^2; q)_{m+1} is nonzero")
}

/// The finite quintuple sum over the common denominator `(x^2;q)_{2m+1}`.
pub fn finite_quintuple_sum(m: u32) -> RationalFunction {
    finite_quintuple_sum_with(m, None)
}

/// As [`finite_quintuple_sum`]; [`Mutation::DropFactor`] removes the
/// `(1 + x q^k)` factor from every summand.
pub fn finite_quintuple_sum_with(m: u32, mutation: Option<Mutation>) -> RationalFunction {
    let mi = i64::from(m);
    let common = poch_poly(&x_squared(), 2 * m + 1);
    let mut binoms = QBinomials::new();
    let row = binoms.row(m).to_vec();
    // Summand k over (x^2;q)_{2m+1}: since
    // (q^k x^2;q)_{m+1} = (x^2;q)_{m+k+1} / (x^2;q)_k, multiply its numerator
    // by (x^2;q)_k (q^{m+k+1} x^2;q)_{m-k}. The shared (x;q)_{m+1} is applied
    // once after summation.
    let mut acc = RationalFunction::new(Laurent::zero(), common.clone()).expect("nonzero");
    for (k, binom) in row.iter().enumerate() {
        let ki = k as i64;
        let mut num = binom.mul_monomial(&Monomial::unit(ki * ki, ki));
        if mutation != Some(Mutation::DropFactor) {
            num = num.mul_one_minus(&Monomial::neg_unit(ki, 1));
        }
        num = mul_poch(&num, &x_squared(), k as u32, 1);
        num = mul_poch(&num, &Monomial::unit(mi + ki + 1, 2), m - k as u32, 1);
        acc = acc.add(&RationalFunction::new(num, common.clone()).expect("nonzero"));
    }
    let (num, den) = acc.into_parts();
    let num = mul_poch(&num, &Monomial::x(), m + 1, 1);
    RationalFunction::new(num, den).expect("nonzero")
}

/// Term-by-term accumulation with general `rf_add`; slow, used as a
/// cross-check of the common-denominator route.
pub fn finite_quintuple_sum_naive(m: u32) -> RationalFunction {
    (0..=m).fold(RationalFunction::zero(), |acc, k| acc.add(&finite_quintuple_summand(m, k)))
}

pub fn verify_finite_quintuple(m: u32) -> VerificationReport {
    verify_finite_quintuple_with(m, None)
}

pub fn verify_finite_quintuple_with(m: u32, mutation: Option<Mutation>) -> VerificationReport {
    let mut builder = ReportBuilder::new(IdentityId::FiniteQuintuple).int("m", i64::from(m));
    if let Some(mu) = mutation {
        builder = builder.text("mutation", mu.as_str());
    }
    let sum = finite_quintuple_sum_with(m, mutation);
    let (lhs, rhs) = sum.cross_products(&RationalFunction::one());
    builder.compare(&lhs, &rhs)
}

/// The finite bilateral sum
/// `sum_{k=-m}^{n} (1 - x q^k) [m+n, m+k] (-x;q)_{1+n} (-q/x;q)_m
///   / ((x^2;q)_{1+n+k} (q/x^2;q)_{m-k}) * x^{3k} q^{k^2 + C(k,2)}`.
pub fn bilateral_sum(m: u32, n: u32) -> RationalFunction {
    bilateral_sum_with(m, n, None)
}

/// As [`bilateral_sum`]; [`Mutation::AlterExponent`] replaces `x^{3k}` by
/// `x^{2k}`.
///
/// Summands share the denominator `(x^2;q)_{1+2n} (q/x^2;q)_{2m}`; summand `k`
/// is scaled by `(q^{1+n+k} x^2;q)_{n-k} (q^{1+m-k}/x^2;q)_{m+k}`, which is a
/// polynomial even when `1+n+k` or `m-k` is negative.
pub fn bilateral_sum_with(m: u32, n: u32, mutation: Option<Mutation>) -> RationalFunction {
    let (mi, ni) = (i64::from(m), i64::from(n));
    let x_pow = if mutation == Some(Mutation::AlterExponent) { 2 } else { 3 };
    let q_over_x2 = Monomial::unit(1, -2);
    let common = mul_poch(&poch_poly(&x_squared(), 2 * n + 1), &q_over_x2, 2 * m, 1);
    let row = QBinomials::new().row(m + n).to_vec();

    let mut sum = Laurent::zero();
    for k in -mi..=ni {
        let mut term = row[(mi + k) as usize].mul_monomial(&Monomial::unit(k * k + tri(k), x_pow * k));
        term = term.mul_one_minus(&Monomial::unit(k, 1));
        term = mul_poch(&term, &Monomial::unit(1 + ni + k, 2), (ni - k) as u32, 1);
        term = mul_poch(&term, &Monomial::unit(1 + mi - k, -2), (mi + k) as u32, 1);
        sum = &sum + &term;
    }
    sum = mul_poch(&sum, &Monomial::neg_unit(0, 1), n + 1, 1);
    sum = mul_poch(&sum, &Monomial::neg_unit(1, -1), m, 1);
    RationalFunction::new(sum, common).expect("nonzero")
}

/// Whether the bilateral window reaches a negative q-shifted factorial
/// length: `1+n+k < 0` happens iff `m > n+1`, `m-k < 0` iff `n > m`.
fn uses_extended_index(m: u32, n: u32) -> bool {
    m > n + 1 || n > m
}

pub fn verify_bilateral(m: u32, n: u32) -> VerificationReport {
    verify_bilateral_with(m, n, None)
}

pub fn verify_bilateral_with(m: u32, n: u32, mutation: Option<Mutation>) -> VerificationReport {
    let mut builder = ReportBuilder::new(IdentityId::Bilateral)
        .int("m", i64::from(m))
        .int("n", i64::from(n))
        .int("extended_index", i64::from(uses_extended_index(m, n)));
    if let Some(mu) = mutation {
        builder = builder.text("mutation", mu.as_str());
    }
    let (lhs, rhs) = bilateral_sum_with(m, n, mutation).cross_products(&RationalFunction::one());
    builder.compare(&lhs, &rhs)
}

/// Replays the factorial-fraction step that turns the finite form into the
/// bilateral one (`m -> m+n`, `x -> -q^{-m} x`, `k -> k+m`):
///
/// ```text
/// (-q^{-m}x;q)_{m+n+1} / (q^{k-m}x^2;q)_{m+n+1}
///   = (-q^{-m}x;q)_m (-x;q)_{1+n} / ((q^{k-m}x^2;q)_{m-k} (x^2;q)_{1+n+k})
///   = (-1)^{m-k} q^{C(k,2)-mk} x^{2k-m}
///     (-q/x;q)_m (-x;q)_{1+n} / ((q/x^2;q)_{m-k} (x^2;q)_{1+n+k})
/// ```
///
/// Both equalities are checked.
pub fn verify_substitution_relation(m: u32, n: u32, k: i64) -> Result<VerificationReport, VerifyError> {
    let (mi, ni) = (i64::from(m), i64::from(n));
    if k < -mi || k > ni {
        return Err(VerifyError::IndexOutOfRange { k, lo: -mi, hi: ni });
    }
    let builder = ReportBuilder::new(IdentityId::SubstitutionRelation).int("m", mi).int("n", ni).int("k", k);

    let shifted_x = Monomial::neg_unit(-mi, 1);
    let shifted_x2 = Monomial::unit(k - mi, 2);
    let neg_x = Monomial::neg_unit(0, 1);

    let whole = poch_x(&shifted_x, mi + ni + 1)
        .div(&poch_x(&shifted_x2, mi + ni + 1))
        .expect("nonzero");

    let split_num = poch_x(&shifted_x, mi).mul(&poch_x(&neg_x, 1 + ni));
    let split_den = poch_x(&shifted_x2, mi - k).mul(&poch_x(&x_squared(), 1 + ni + k));
    let split = split_num.div(&split_den).expect("nonzero");

    let sign = if (mi - k).rem_euclid(2) == 0 { Monomial::unit(tri(k) - mi * k, 2 * k - mi) } else {
        Monomial::neg_unit(tri(k) - mi * k, 2 * k - mi)
    };
    let final_num = poch_x(&Monomial::neg_unit(1, -1), mi).mul(&poch_x(&neg_x, 1 + ni)).mul_poly(&sign.into());
    let final_den = poch_x(&Monomial::unit(1, -2), mi - k).mul(&poch_x(&x_squared(), 1 + ni + k));
    let last = final_num.div(&final_den).expect("nonzero");

    let (a1, b1) = whole.cross_products(&split);
    let (a2, b2) = split.cross_products(&last);
    Ok(builder.compare_all(&[(&a1, &b1), (&a2, &b2)]))
}
