//! Builds both sides of each identity and compares them exactly.
//!
//! Finite identities are compared as rational functions by
//! cross-multiplication, infinite products as truncated series, and the
//! three-variable q-Dixon sum by exact evaluation at sampled rational points.

mod dixon;
mod finite;
mod report;
mod sample;
mod series;

pub use dixon::{
    dixon_limit_sum, dixon_limit_summand, qdixon_rhs, qdixon_sum, verify_dixon_limit, verify_dixon_term_match,
    verify_qdixon_sampled, verify_qdixon_specialized,
};
pub use finite::{
    bilateral_sum, bilateral_sum_with, finite_quintuple_sum, finite_quintuple_sum_naive, finite_quintuple_sum_with,
    finite_quintuple_summand, verify_bilateral, verify_bilateral_with, verify_finite_quintuple,
    verify_finite_quintuple_with, verify_substitution_relation,
};
pub use report::{IdentityId, Metrics, ParamValue, Status, VerificationReport, Witness};
pub use sample::{SamplePoint, Sampler, RESAMPLE_BUDGET};
pub use series::{
    quintuple_lhs_series, quintuple_lhs_series_with, quintuple_rhs_series, verify_product_relation,
    verify_product_relation_with, verify_quintuple, verify_quintuple_with,
};

use rayon::prelude::*;
use thiserror::Error;

/// A deliberate corruption of an identity, used as a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Finite form: drop `(1 + x q^k)`. Product relation: drop `(q;q)_inf`.
    DropFactor,
    /// Bilateral form: `x^{3k}` becomes `x^{2k}`. Quintuple series:
    /// `q^{3 C(k,2)}` becomes `q^{2 C(k,2)}`.
    AlterExponent,
}

impl Mutation {
    pub fn as_str(self) -> &'static str {
        match self {
            Mutation::DropFactor => "drop-factor",
            Mutation::AlterExponent => "alter-exponent",
        }
    }

    pub fn applies_to(self, identity: IdentityId) -> bool {
        matches!(
            (self, identity),
            (Mutation::DropFactor, IdentityId::FiniteQuintuple)
                | (Mutation::DropFactor, IdentityId::ProductRelation)
                | (Mutation::AlterExponent, IdentityId::Bilateral)
                | (Mutation::AlterExponent, IdentityId::QuintupleSeries)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("no admissible sample point for trial {trial} after {budget} draws")]
    ResampleBudgetExhausted { trial: u32, budget: u32 },
    #[error("mutation {mutation} does not apply to {identity}")]
    UnsupportedMutation { mutation: &'static str, identity: &'static str },
    #[error("k = {k} lies outside {lo}..={hi}")]
    IndexOutOfRange { k: i64, lo: i64, hi: i64 },
}

/// One parameterized check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    FiniteQuintuple { m: u32 },
    Bilateral { m: u32, n: u32 },
    Substitution { m: u32, n: u32, k: i64 },
    Quintuple { order: u32 },
    ProductRelation { order: u32 },
    QdixonSampled { m: u32, trials: u32, seed: u64 },
    QdixonSpecialized { m: u32, power: u32, points: u32, seed: u64 },
    DixonLimit { m: u32 },
    DixonTermMatch { m: u32, k: u32 },
}

impl Check {
    pub fn identity(&self) -> IdentityId {
        match self {
            Check::FiniteQuintuple { .. } => IdentityId::FiniteQuintuple,
            Check::Bilateral { .. } => IdentityId::Bilateral,
            Check::Substitution { .. } => IdentityId::SubstitutionRelation,
            Check::Quintuple { .. } => IdentityId::QuintupleSeries,
            Check::ProductRelation { .. } => IdentityId::ProductRelation,
            Check::QdixonSampled { .. } | Check::QdixonSpecialized { .. } => IdentityId::QdixonSampled,
            Check::DixonLimit { .. } => IdentityId::DixonLimit,
            Check::DixonTermMatch { .. } => IdentityId::DixonTermMatch,
        }
    }

    pub fn run(&self, mutation: Option<Mutation>) -> Result<VerificationReport, VerifyError> {
        if let Some(mu) = mutation {
            if !mu.applies_to(self.identity()) {
                return Err(VerifyError::UnsupportedMutation {
                    mutation: mu.as_str(),
                    identity: self.identity().as_str(),
                });
            }
        }
        let report = match *self {
            Check::FiniteQuintuple { m } => verify_finite_quintuple_with(m, mutation),
            Check::Bilateral { m, n } => verify_bilateral_with(m, n, mutation),
            Check::Substitution { m, n, k } => verify_substitution_relation(m, n, k)?,
            Check::Quintuple { order } => verify_quintuple_with(order, mutation),
            Check::ProductRelation { order } => verify_product_relation_with(order, mutation),
            Check::QdixonSampled { m, trials, seed } => verify_qdixon_sampled(m, trials, seed)?,
            Check::QdixonSpecialized { m, power, points, seed } => verify_qdixon_specialized(m, power, points, seed)?,
            Check::DixonLimit { m } => verify_dixon_limit(m),
            Check::DixonTermMatch { m, k } => verify_dixon_term_match(m, k)?,
        };
        Ok(report)
    }
}

/// Runs checks in parallel; reports come back in input order.
pub fn run_checks(checks: &[Check], mutation: Option<Mutation>) -> Result<Vec<VerificationReport>, VerifyError> {
    checks.par_iter().map(|c| c.run(mutation)).collect()
}
