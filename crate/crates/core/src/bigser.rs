//! Serde adapter for big integers: a JSON number when the value fits in a
//! `u64`, a decimal string otherwise. Both forms are accepted on input.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match n.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr {
    Int(u64),
    Text(String),
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    match Repr::deserialize(d)? {
        Repr::Int(v) => Ok(BigUint::from(v)),
        Repr::Text(t) => t
            .parse()
            .map_err(|_| de::Error::custom(format!("not a non-negative integer: {t:?}"))),
    }
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(n: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match n {
            Some(v) => super::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<Repr>::deserialize(d)?
            .map(|r| match r {
                Repr::Int(v) => Ok(BigUint::from(v)),
                Repr::Text(t) => t
                    .parse()
                    .map_err(|_| de::Error::custom(format!("not a non-negative integer: {t:?}"))),
            })
            .transpose()
    }
}
