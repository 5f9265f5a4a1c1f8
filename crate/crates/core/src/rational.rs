//! Exact rational arithmetic for FAT parameters.
//!
//! All validation-facing quantities (`alpha`, `beta`, lift parameters) are
//! arbitrary-precision rationals; floating point never decides a validation
//! outcome. Values serialize as reduced `"p/q"` strings.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Reduced arbitrary-precision rational, denominator always positive.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational string")]
    Empty,
    #[error("invalid integer part in rational: {0}")]
    BadInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Build a rational from machine integers.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Format as a reduced `"p/q"` string; integers keep an explicit `/1`.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `"p/q"` (or a bare integer `"p"`).
pub fn parse_ratio(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(num_str.to_string()))?;
    let den: BigInt = den_str
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(den_str.to_string()))?;
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Nearest f64 value (numerator / denominator).
pub fn to_f64(r: &Rational) -> f64 {
    // BigRational has no lossless conversion; split to avoid overflowing
    // f64 parsing for large terms (never large in practice here).
    let n = r.numer();
    let d = r.denom();
    let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

/// True iff `r` is in the closed interval [0, 1].
pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

/// Serde adapter serializing a [`Rational`] as a `"p/q"` string.
pub mod ratio_string {
    use super::{format_ratio, parse_ratio, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_ratio(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        parse_ratio(&s).map_err(D::Error::custom)
    }
}
