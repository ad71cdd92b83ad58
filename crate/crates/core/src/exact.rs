//! Exact rationals serialized as `"p/q"` strings (`"p"` when integral).

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;

pub type Rational = BigRational;

pub fn int(x: i64) -> Rational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn serialize_vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

pub fn serialize_nested<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|row| row.iter().map(|r| r.to_string()).collect::<Vec<_>>()))
}
