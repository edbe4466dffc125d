use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

/// One exact invariant value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportValue {
    Integer(BigInt),
    Rational(BigRational),
    IntegerSet(Vec<BigInt>),
    Boolean(bool),
}

impl fmt::Display for ReportValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportValue::Integer(x) => write!(f, "{x}"),
            ReportValue::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            ReportValue::IntegerSet(xs) => {
                write!(f, "[")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
            ReportValue::Boolean(b) => write!(f, "{b}"),
        }
    }
}

/// A named map of exact invariant values with per-invariant provenance
/// notes (algorithm path, scan bounds, completeness flags).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InvariantReport {
    pub values: BTreeMap<String, ReportValue>,
    pub notes: BTreeMap<String, String>,
}

impl InvariantReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: &str, value: ReportValue) {
        self.values.insert(key.to_string(), value);
    }

    pub fn note(&mut self, key: &str, note: impl Into<String>) {
        self.notes.insert(key.to_string(), note.into());
    }
}
