//! Text, JSON and CSV renderings of reports and coefficient lists.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::algebra::{Laurent, Rational};
use crate::verify::{ParamValue, SamplePoint, VerificationReport, Witness};

/// Always `p/r`, including integers (`3/1`).
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Serialize)]
struct JsonMetrics {
    terms: usize,
    max_q_deg: i64,
    max_x_deg: i64,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct JsonReport {
    identity: &'static str,
    params: Map<String, Value>,
    status: &'static str,
    witness: Option<Value>,
    metrics: JsonMetrics,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    samples: Vec<Value>,
}

fn point_json(p: &SamplePoint) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("q".into(), Value::String(rational_string(&p.q)));
    m.insert("x".into(), Value::String(rational_string(&p.x)));
    m.insert("M".into(), Value::String(rational_string(&p.m_param)));
    m
}

fn witness_json(w: &Witness) -> Value {
    let mut m = Map::new();
    match w {
        Witness::Coefficient { q_exp, x_exp, lhs, rhs } => {
            m.insert("q_exp".into(), Value::from(*q_exp));
            m.insert("x_exp".into(), Value::from(*x_exp));
            m.insert("lhs".into(), Value::String(rational_string(lhs)));
            m.insert("rhs".into(), Value::String(rational_string(rhs)));
        }
        Witness::Sample { point, lhs, rhs } => {
            m.extend(point_json(point));
            m.insert("lhs".into(), Value::String(rational_string(lhs)));
            m.insert("rhs".into(), Value::String(rational_string(rhs)));
        }
    }
    Value::Object(m)
}

/// One newline-free JSON object. With `timing == false` the elapsed time is
/// written as `0.0` so repeated runs are byte-identical.
pub fn report_json(r: &VerificationReport, timing: bool) -> String {
    let params = r
        .params
        .iter()
        .map(|(k, v)| {
            let v = match v {
                ParamValue::Int(i) => Value::from(*i),
                ParamValue::Text(s) => Value::String(s.clone()),
            };
            (k.clone(), v)
        })
        .collect();
    let out = JsonReport {
        identity: r.identity.as_str(),
        params,
        status: r.status.as_str(),
        witness: r.witness.as_ref().map(witness_json),
        metrics: JsonMetrics {
            terms: r.metrics.terms,
            max_q_deg: r.metrics.max_q_deg,
            max_x_deg: r.metrics.max_x_deg,
            elapsed_ms: if timing { r.metrics.elapsed_ms } else { 0.0 },
        },
        samples: r.samples.iter().map(|p| Value::Object(point_json(p))).collect(),
    };
    serde_json::to_string(&out).expect("report serializes")
}

pub fn report_text(r: &VerificationReport, timing: bool) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut out = format!(
        "{} {} {} [terms={} max_q_deg={} max_x_deg={}]",
        r.status.as_str().to_uppercase(),
        r.identity,
        params.join(" "),
        r.metrics.terms,
        r.metrics.max_q_deg,
        r.metrics.max_x_deg,
    );
    if timing {
        out.push_str(&format!(" {:.3} ms", r.metrics.elapsed_ms));
    }
    match &r.witness {
        Some(Witness::Coefficient { q_exp, x_exp, lhs, rhs }) => {
            out.push_str(&format!("\n  witness: q^{q_exp} x^{x_exp}: lhs {lhs}, rhs {rhs}"));
        }
        Some(Witness::Sample { point, lhs, rhs }) => {
            out.push_str(&format!("\n  witness: {point}: lhs {lhs}, rhs {rhs}"));
        }
        None => {}
    }
    for (i, p) in r.samples.iter().enumerate() {
        out.push_str(&format!("\n  sample {}: {p}", i + 1));
    }
    out
}

pub fn coeff_record_json(q_exp: i64, x_exp: i64, c: &Rational) -> String {
    let mut m = Map::new();
    m.insert("q_exp".into(), Value::from(q_exp));
    m.insert("x_exp".into(), Value::from(x_exp));
    m.insert("coeff".into(), Value::String(rational_string(c)));
    Value::Object(m).to_string()
}

pub const CSV_HEADER: &str = "q_exp,x_exp,coeff";

pub fn coeff_record_csv(q_exp: i64, x_exp: i64, c: &Rational) -> String {
    format!("{q_exp},{x_exp},{}", rational_string(c))
}

/// One record per stored monomial in `(q_exp, x_exp)` order.
pub fn coefficient_lines(p: &Laurent, json: bool) -> Vec<String> {
    let mut lines = Vec::with_capacity(p.len() + 1);
    if !json {
        lines.push(CSV_HEADER.to_string());
    }
    for ((a, b), c) in p.terms() {
        lines.push(if json { coeff_record_json(*a, *b, c) } else { coeff_record_csv(*a, *b, c) });
    }
    lines
}
