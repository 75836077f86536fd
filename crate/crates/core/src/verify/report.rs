use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use crate::algebra::{Laurent, Rational};

use super::SamplePoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    FiniteQuintuple,
    Bilateral,
    SubstitutionRelation,
    QuintupleSeries,
    ProductRelation,
    QdixonSampled,
    DixonLimit,
    DixonTermMatch,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::FiniteQuintuple => "finite-quintuple",
            IdentityId::Bilateral => "bilateral",
            IdentityId::SubstitutionRelation => "substitution-relation",
            IdentityId::QuintupleSeries => "quintuple-series",
            IdentityId::ProductRelation => "product-relation",
            IdentityId::QdixonSampled => "qdixon-sampled",
            IdentityId::DixonLimit => "dixon-limit",
            IdentityId::DixonTermMatch => "dixon-term-match",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

/// The first point of disagreement between the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Smallest `(q_exp, x_exp)` whose coefficients differ.
    Coefficient { q_exp: i64, x_exp: i64, lhs: Rational, rhs: Rational },
    /// A sample point where the two sides evaluate differently.
    Sample { point: SamplePoint, lhs: Rational, rhs: Rational },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Metrics {
    pub terms: usize,
    pub max_q_deg: i64,
    pub max_x_deg: i64,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: BTreeMap<String, ParamValue>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub metrics: Metrics,
    /// Every point evaluated by a sampling check, in draw order.
    pub samples: Vec<SamplePoint>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn param(&self, key: &str) -> Option<&ParamValue> {
        self.params.get(key)
    }
}

/// Accumulates parameters and timing for one report.
pub(crate) struct ReportBuilder {
    identity: IdentityId,
    params: BTreeMap<String, ParamValue>,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(identity: IdentityId) -> Self {
        Self { identity, params: BTreeMap::new(), started: Instant::now() }
    }

    pub(crate) fn int(mut self, key: &str, v: i64) -> Self {
        self.params.insert(key.to_string(), ParamValue::Int(v));
        self
    }

    pub(crate) fn text(mut self, key: &str, v: impl Into<String>) -> Self {
        self.params.insert(key.to_string(), ParamValue::Text(v.into()));
        self
    }

    fn elapsed_ms(&self) -> f64 {
        self.started.elapsed().as_secs_f64() * 1000.0
    }

    /// Finishes a report that compared two polynomials termwise.
    pub(crate) fn compare(self, lhs: &Laurent, rhs: &Laurent) -> VerificationReport {
        let witness = lhs
            .first_difference(rhs)
            .map(|((q_exp, x_exp), l, r)| Witness::Coefficient { q_exp, x_exp, lhs: l, rhs: r });
        let metrics = poly_metrics(&[lhs, rhs]);
        self.finish(witness, metrics, Vec::new())
    }

    /// Combines several termwise comparisons; the first failing one supplies
    /// the witness.
    pub(crate) fn compare_all(self, pairs: &[(&Laurent, &Laurent)]) -> VerificationReport {
        let witness = pairs.iter().find_map(|(l, r)| {
            l.first_difference(r)
                .map(|((q_exp, x_exp), a, b)| Witness::Coefficient { q_exp, x_exp, lhs: a, rhs: b })
        });
        let polys: Vec<&Laurent> = pairs.iter().flat_map(|(l, r)| [*l, *r]).collect();
        let metrics = poly_metrics(&polys);
        self.finish(witness, metrics, Vec::new())
    }

    pub(crate) fn finish(self, witness: Option<Witness>, mut metrics: Metrics, samples: Vec<SamplePoint>) -> VerificationReport {
        metrics.elapsed_ms = self.elapsed_ms();
        VerificationReport {
            identity: self.identity,
            params: self.params,
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
            metrics,
            samples,
        }
    }
}

fn poly_metrics(polys: &[&Laurent]) -> Metrics {
    Metrics {
        terms: polys.iter().map(|p| p.len()).max().unwrap_or(0),
        max_q_deg: polys.iter().filter_map(|p| p.q_range()).map(|r| r.1).max().unwrap_or(0),
        max_x_deg: polys.iter().filter_map(|p| p.x_range()).map(|r| r.1).max().unwrap_or(0),
        elapsed_ms: 0.0,
    }
}
