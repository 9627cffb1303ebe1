//! Result records: the JSON unit of output and of the table cache.
//!
//! Serialization is lossless: big integers become arbitrary-precision JSON
//! numbers, polynomials become ascending-degree coefficient arrays.

use std::str::FromStr;

use num::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

use crate::poly::DensePolynomial;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<Number>,
    pub invariant: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub at: Option<i64>,
    pub values: Value,
    pub engine: String,
}

impl ResultRecord {
    pub fn new(invariant: &str, n: u32, d: Option<&BigInt>, values: Value) -> Self {
        ResultRecord {
            n,
            d: d.map(json_number),
            invariant: invariant.to_string(),
            k: None,
            partition: None,
            at: None,
            values,
            engine: ENGINE_VERSION.to_string(),
        }
    }

    /// Idempotence key for the table cache.
    pub fn cache_key(&self) -> (String, String, u32, String) {
        (
            self.engine.clone(),
            self.invariant.clone(),
            self.n,
            self.d.as_ref().map(Number::to_string).unwrap_or_default(),
        )
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

pub fn json_number(z: &BigInt) -> Number {
    Number::from_str(&z.to_string()).expect("an integer is a valid JSON number")
}

pub fn json_int(z: &BigInt) -> Value {
    Value::Number(json_number(z))
}

pub fn json_int_array(zs: &[BigInt]) -> Value {
    Value::Array(zs.iter().map(json_int).collect())
}

/// Ascending-degree coefficient array.
pub fn json_poly(p: &DensePolynomial<BigInt>) -> Value {
    json_int_array(p.coeffs())
}

pub fn json_object(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// Bracketed ascending-coefficient rendering used in text and CSV cells.
pub fn bracket_ints(zs: &[BigInt]) -> String {
    let inner: Vec<String> = zs.iter().map(BigInt::to_string).collect();
    format!("[{}]", inner.join(","))
}
