//! Versioned output document shared by every subcommand.

use std::collections::BTreeMap;
use std::fmt;

use norlund::ring::{format_rational, parse_rational};
use norlund::{Family, MultiIndex, OrderPolynomial, Rational, VerificationReport};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const SCHEMA_VERSION: &str = "1";

/// Exact rational carried as a `"p/q"` string.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text)
            .map(Q)
            .map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

/// A number at a fixed order, or a polynomial in t given as coefficients
/// from the constant term upwards. The zero polynomial is `["0"]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Exact(Q),
    Symbolic(Vec<Q>),
}

impl Value {
    pub fn exact(q: Rational) -> Self {
        Value::Exact(Q(q))
    }

    pub fn symbolic(p: &OrderPolynomial) -> Self {
        let mut coeffs: Vec<Q> = p.coeffs().iter().cloned().map(Q).collect();
        if coeffs.is_empty() {
            coeffs.push(Q(Rational::from_integer(0.into())));
        }
        Value::Symbolic(coeffs)
    }

    pub fn as_polynomial(&self) -> OrderPolynomial {
        match self {
            Value::Exact(q) => OrderPolynomial::constant(q.0.clone()),
            Value::Symbolic(cs) => OrderPolynomial::from_rationals(cs.iter().map(|q| q.0.clone())),
        }
    }
}

/// Order argument: a fixed rational or the symbol t itself.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Order {
    Fixed(Q),
    Symbolic(Symbolic),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symbolic {
    Symbolic,
}

impl Order {
    pub fn fixed(&self) -> Option<&Rational> {
        match self {
            Order::Fixed(q) => Some(&q.0),
            Order::Symbolic(_) => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Fixed(q) => q.fmt(f),
            Order::Symbolic(_) => f.write_str("symbolic"),
        }
    }
}

impl std::str::FromStr for Order {
    type Err = norlund::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "symbolic" {
            Ok(Order::Symbolic(Symbolic::Symbolic))
        } else {
            parse_rational(s).map(|q| Order::Fixed(Q(q)))
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: BTreeMap<String, String>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Entry {
    pub v: MultiIndex,
    pub value: Value,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct NumbersTable {
    pub family: Family,
    pub dimension: usize,
    pub max_degree: usize,
    pub t: Order,
    pub entries: Vec<Entry>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Term {
    pub exponent: MultiIndex,
    pub coeff: Value,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub family: Family,
    pub v: MultiIndex,
    pub t: Order,
    pub terms: Vec<Term>,
    pub text: String,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct EvaluationDoc {
    pub family: Family,
    pub v: MultiIndex,
    pub x: Vec<Q>,
    pub t: Q,
    pub value: Q,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ReportCollection {
    pub reports: Vec<VerificationReport>,
    pub all_passed: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Numbers(NumbersTable),
    Polynomial(PolynomialDoc),
    Evaluation(EvaluationDoc),
    Reports(ReportCollection),
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: CommandEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_unix: Option<u64>,
    pub payload: Payload,
}

impl OutputDocument {
    pub fn new(command: CommandEcho, payload: Payload) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            generated_unix: None,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
