use crate::algebra::{Laurent, Monomial, TruncatedSeries};
use crate::qcomb::{bracket_inf, poch_inf, tri, ProductSpec};

use super::report::ReportBuilder;
use super::{IdentityId, Mutation, VerificationReport};

/// `sum_k (1 - x q^k) q^{3 C(k,2)} (q x^3)^k` modulo `q^(order+1)`.
pub fn quintuple_lhs_series(order: u32) -> TruncatedSeries {
    quintuple_lhs_series_with(order, None)
}

/// As [`quintuple_lhs_series`]; [`Mutation::AlterExponent`] uses
/// `q^{2 C(k,2)}` instead of `q^{3 C(k,2)}`.
///
/// Summand `k` contributes `q^e x^{3k} - q^{e+k} x^{3k+1}` with
/// `e = 3 C(k,2) + k = k(3k-1)/2`. Both exponents grow with `|k|`, so `k`
/// runs outward from zero in each direction until both exceed the order.
pub fn quintuple_lhs_series_with(order: u32, mutation: Option<Mutation>) -> TruncatedSeries {
    let t = i64::from(order);
    let weight = if mutation == Some(Mutation::AlterExponent) { 2 } else { 3 };
    let exponents = |k: i64| {
        let e = weight * tri(k) + k;
        (e, e + k)
    };
    let mut terms = Vec::new();
    for dir in [1i64, -1] {
        let mut k = if dir == 1 { 0 } else { -1 };
        loop {
            let (e1, e2) = exponents(k);
            if e1.min(e2) > t {
                break;
            }
            if e1 <= t {
                terms.push(((e1, 3 * k), crate::algebra::rat(1)));
            }
            if e2 <= t {
                terms.push(((e2, 3 * k + 1), crate::algebra::rat(-1)));
            }
            k += dir;
        }
    }
    TruncatedSeries::new(Laurent::from_terms(terms), order).expect("exponents are nonnegative")
}

fn theta_spec() -> ProductSpec {
    ProductSpec::new(vec![Monomial::q(), Monomial::x(), Monomial::unit(1, -1)], 1).expect("valid")
}

fn squared_spec() -> ProductSpec {
    ProductSpec::new(vec![Monomial::unit(1, 2), Monomial::unit(1, -2)], 2).expect("valid")
}

/// `[q, x, q/x; q]_inf [q x^2, q/x^2; q^2]_inf` modulo `q^(order+1)`.
pub fn quintuple_rhs_series(order: u32) -> TruncatedSeries {
    let a = bracket_inf(&theta_spec(), order).expect("valid bases");
    let b = bracket_inf(&squared_spec(), order).expect("valid bases");
    a.mul(&b).expect("same order")
}

pub fn verify_quintuple(order: u32) -> VerificationReport {
    verify_quintuple_with(order, None)
}

pub fn verify_quintuple_with(order: u32, mutation: Option<Mutation>) -> VerificationReport {
    let mut builder = ReportBuilder::new(IdentityId::QuintupleSeries).int("T", i64::from(order));
    if let Some(mu) = mutation {
        builder = builder.text("mutation", mu.as_str());
    }
    let lhs = quintuple_lhs_series_with(order, mutation);
    let rhs = quintuple_rhs_series(order);
    builder.compare(lhs.poly(), rhs.poly())
}

fn product_of(bases: &[(Monomial, u32)], order: u32) -> TruncatedSeries {
    bases.iter().fold(TruncatedSeries::one(order), |acc, (b, d)| {
        acc.mul(&poch_inf(b, *d, order).expect("valid base")).expect("same order")
    })
}

pub fn verify_product_relation(order: u32) -> VerificationReport {
    verify_product_relation_with(order, None)
}

/// Checks, without division,
/// `(q;q)_inf (x^2;q)_inf (q/x^2;q)_inf
///   == [q,x,q/x;q]_inf [q x^2, q/x^2; q^2]_inf (-x;q)_inf (-q/x;q)_inf`.
/// [`Mutation::DropFactor`] leaves out `(q;q)_inf`.
pub fn verify_product_relation_with(order: u32, mutation: Option<Mutation>) -> VerificationReport {
    let mut builder = ReportBuilder::new(IdentityId::ProductRelation).int("T", i64::from(order));
    if let Some(mu) = mutation {
        builder = builder.text("mutation", mu.as_str());
    }
    let mut left_bases = vec![(Monomial::unit(0, 2), 1), (Monomial::unit(1, -2), 1)];
    if mutation != Some(Mutation::DropFactor) {
        left_bases.push((Monomial::q(), 1));
    }
    let left = product_of(&left_bases, order);
    let right = quintuple_rhs_series(order)
        .mul(&product_of(&[(Monomial::neg_unit(0, 1), 1), (Monomial::neg_unit(1, -1), 1)], order))
        .expect("same order");
    builder.compare(left.poly(), right.poly())
}
