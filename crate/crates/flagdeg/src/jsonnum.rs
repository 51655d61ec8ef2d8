//! Exact JSON numbers for big integers.
//!
//! Degree counts overflow u64 quickly, and rounding them through f64
//! would silently corrupt them. serde_json's arbitrary-precision mode
//! keeps the full decimal expansion; these helpers bridge it to BigUint.
//! The module doubles as a `#[serde(with = "crate::jsonnum")]` target.

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn to_number(n: &BigUint) -> serde_json::Number {
    serde_json::from_str(&n.to_string()).expect("decimal digits form a JSON number")
}

pub fn from_number(n: &serde_json::Number) -> Result<BigUint, String> {
    n.to_string()
        .parse::<BigUint>()
        .map_err(|_| format!("expected a non-negative integer, got {n}"))
}

pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    to_number(n).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    let num = serde_json::Number::deserialize(d)?;
    from_number(&num).map_err(serde::de::Error::custom)
}
