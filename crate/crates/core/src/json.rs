//! Serde adapters that write arbitrary-precision integers as bare JSON
//! numbers, so reports never fall back to strings or floats.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;

fn to_number(n: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

fn from_number<'de, D: Deserializer<'de>>(n: serde_json::Number) -> Result<BigInt, D::Error> {
    BigInt::from_str(&n.to_string())
        .map_err(|_| D::Error::custom(format!("expected an integer, got {n}")))
}

pub mod int {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_number(n).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_number::<D>(serde_json::Number::deserialize(d)?)
    }
}

pub mod int_opt {
    use super::*;

    pub fn serialize<S: Serializer>(n: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        n.as_ref().map(to_number).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<serde_json::Number>::deserialize(d)?
            .map(from_number::<D>)
            .transpose()
    }
}

pub mod int_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(to_number).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<serde_json::Number>::deserialize(d)?
            .into_iter()
            .map(from_number::<D>)
            .collect()
    }
}

pub mod int_mat {
    use super::*;

    pub fn serialize<S: Serializer>(m: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        m.iter()
            .map(|row| row.iter().map(to_number).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Vec::<Vec<serde_json::Number>>::deserialize(d)?
            .into_iter()
            .map(|row| row.into_iter().map(from_number::<D>).collect())
            .collect()
    }
}

/// An exact rational as it appears on the wire: `{"num": n, "den": d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    #[serde(with = "int")]
    pub num: BigInt,
    #[serde(with = "int")]
    pub den: BigInt,
}

impl From<&num_rational::BigRational> for JsonRational {
    fn from(r: &num_rational::BigRational) -> Self {
        JsonRational {
            num: r.numer().clone(),
            den: r.denom().clone(),
        }
    }
}

impl From<JsonRational> for num_rational::BigRational {
    fn from(r: JsonRational) -> Self {
        num_rational::BigRational::new(r.num, r.den)
    }
}

pub mod rational {
    use super::*;
    use num_rational::BigRational;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        JsonRational::from(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let r = JsonRational::deserialize(d)?;
        if r.den == BigInt::from(0) {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(r.into())
    }
}
