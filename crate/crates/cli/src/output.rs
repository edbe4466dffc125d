//! Report assembly and deterministic rendering.

use std::collections::BTreeMap;

use factorinv::invariants::ReportValue;
use factorinv::kernel::IntVector;
use factorinv::monoid::{Factorization, PresentationPair};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::spec::SemigroupSpec;

/// Everything one invocation produces: the echoed input, the requested
/// values in request order, provenance notes, and (opt-in) timings.
pub struct ReportDocument {
    pub spec: Option<SemigroupSpec>,
    pub values: Vec<(String, Rendered)>,
    pub notes: BTreeMap<String, String>,
    pub timings_ms: BTreeMap<String, u128>,
    pub with_timings: bool,
}

/// A value with both its text form and its JSON form.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

pub fn render_int(x: &BigInt) -> Rendered {
    Rendered {
        text: x.to_string(),
        json: big_to_json(x),
    }
}

pub fn render_u64(x: u64) -> Rendered {
    Rendered {
        text: x.to_string(),
        json: json!(x),
    }
}

pub fn render_bool(b: bool) -> Rendered {
    Rendered {
        text: b.to_string(),
        json: json!(b),
    }
}

pub fn render_rational(r: &num_rational::BigRational) -> Rendered {
    let text = if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    };
    Rendered {
        text,
        json: json!({
            "numerator": big_to_json(r.numer()),
            "denominator": big_to_json(r.denom()),
        }),
    }
}

pub fn render_vector(v: &IntVector) -> Rendered {
    Rendered {
        text: v.to_string(),
        json: Value::Array(v.entries().iter().map(big_to_json).collect()),
    }
}

pub fn render_vector_set(vs: &[IntVector]) -> Rendered {
    let text = format!(
        "[{}]",
        vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    );
    Rendered {
        text,
        json: Value::Array(vs.iter().map(|v| render_vector(v).json).collect()),
    }
}

pub fn render_factorizations(zs: &[Factorization]) -> Rendered {
    let vs: Vec<IntVector> = zs.iter().map(|z| z.exponents().clone()).collect();
    render_vector_set(&vs)
}

pub fn render_u64_set(xs: &[u64]) -> Rendered {
    let text = format!(
        "[{}]",
        xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    );
    Rendered {
        text,
        json: Value::Array(xs.iter().map(|&x| json!(x)).collect()),
    }
}

pub fn render_int_set(xs: &[BigInt]) -> Rendered {
    let text = format!(
        "[{}]",
        xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    );
    Rendered {
        text,
        json: Value::Array(xs.iter().map(big_to_json).collect()),
    }
}

pub fn render_pairs(pairs: &[PresentationPair]) -> Rendered {
    let text = format!(
        "[{}]",
        pairs
            .iter()
            .map(|p| format!("({},{})", p.lhs, p.rhs))
            .collect::<Vec<_>>()
            .join(",")
    );
    Rendered {
        text,
        json: Value::Array(
            pairs
                .iter()
                .map(|p| {
                    json!([
                        render_vector(p.lhs.exponents()).json,
                        render_vector(p.rhs.exponents()).json
                    ])
                })
                .collect(),
        ),
    }
}

pub fn render_report_value(v: &ReportValue) -> Rendered {
    match v {
        ReportValue::Integer(x) => render_int(x),
        ReportValue::Rational(r) => render_rational(r),
        ReportValue::IntegerSet(xs) => render_int_set(xs),
        ReportValue::Boolean(b) => render_bool(*b),
    }
}

/// JSON integers stay numbers while they fit, and become decimal strings
/// beyond that, so nothing is ever rounded.
fn big_to_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(n) => json!(n),
        Err(_) => json!(x.to_string()),
    }
}

impl ReportDocument {
    pub fn new(spec: Option<SemigroupSpec>, with_timings: bool) -> Self {
        ReportDocument {
            spec,
            values: Vec::new(),
            notes: BTreeMap::new(),
            timings_ms: BTreeMap::new(),
            with_timings,
        }
    }

    pub fn push(&mut self, key: &str, value: Rendered) {
        self.values.push((key.to_string(), value));
    }

    pub fn note(&mut self, key: &str, note: impl Into<String>) {
        self.notes.insert(key.to_string(), note.into());
    }

    pub fn timing(&mut self, key: &str, ms: u128) {
        self.timings_ms.insert(key.to_string(), ms);
    }

    /// Plain text: one requested value per line (`key: value` when more
    /// than one value was requested, bare value otherwise).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.values.len() == 1 {
            out.push_str(&self.values[0].1.text);
            out.push('\n');
        } else {
            for (k, v) in &self.values {
                out.push_str(&format!("{k}: {}\n", v.text));
            }
        }
        if self.with_timings {
            for (k, ms) in &self.timings_ms {
                out.push_str(&format!("# {k}: {ms} ms\n"));
            }
        }
        out
    }

    /// JSON document with sorted keys throughout.
    pub fn to_json(&self) -> String {
        let mut root = Map::new();
        if let Some(spec) = &self.spec {
            root.insert("spec".into(), serde_json::to_value(spec).unwrap());
        }
        let mut values = Map::new();
        for (k, v) in &self.values {
            values.insert(k.clone(), v.json.clone());
        }
        root.insert("values".into(), Value::Object(values));
        if !self.notes.is_empty() {
            let notes: Map<String, Value> = self
                .notes
                .iter()
                .map(|(k, v)| (k.clone(), json!(v)))
                .collect();
            root.insert("notes".into(), Value::Object(notes));
        }
        if self.with_timings {
            let timings: Map<String, Value> = self
                .timings_ms
                .iter()
                .map(|(k, &ms)| (k.clone(), json!(ms as u64)))
                .collect();
            root.insert("timings_ms".into(), Value::Object(timings));
        }
        serde_json::to_string_pretty(&Value::Object(root)).unwrap()
    }
}
