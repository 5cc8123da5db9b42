//! JSON helpers: big integers are written as exact JSON numbers, never strings or floats.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::{Number, Value};

pub fn bigint_value(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal is a JSON number"))
}

/// `#[serde(serialize_with = "json::bigint")]`
pub fn bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    bigint_value(x).serialize(s)
}

pub fn bigint_vec<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(bigint_value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_integers_are_exact() {
        let x: BigInt = BigInt::from(3).pow(100) * -1;
        let text = serde_json::to_string(&bigint_value(&x)).unwrap();
        assert_eq!(text, x.to_string());
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_string(), x.to_string());
    }
}
