//! JSON helpers for exact integers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Number;

/// Exact JSON number for an arbitrary-precision integer.
pub fn big_number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("integer literal is a valid JSON number")
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}
