//! Exact fractions for user-facing thresholds and reports.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

pub type Fraction = Ratio<u64>;

/// Parses `"0.7"`, `"7/10"` or `"3"` into an exact non-negative fraction.
pub fn parse_fraction(s: &str) -> Result<Fraction> {
    let bad = || Error::BadParams(format!("not a non-negative decimal or fraction: {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
        || frac.len() > 18
    {
        return Err(bad());
    }
    let den = 10u64.pow(frac.len() as u32);
    let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let num = int
        .checked_mul(den)
        .and_then(|x| x.checked_add(frac))
        .ok_or_else(bad)?;
    Ok(Ratio::new(num, den))
}

pub fn fraction_string(f: &Fraction) -> String {
    format!("{}/{}", f.numer(), f.denom())
}

pub fn fraction_f64(f: &Fraction) -> f64 {
    *f.numer() as f64 / *f.denom() as f64
}

pub fn big_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn big_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn to_big(f: &Fraction) -> BigRational {
    BigRational::new(BigInt::from(*f.numer()), BigInt::from(*f.denom()))
}

/// Serde adapter writing a [`Fraction`] as `"num/den"`.
pub mod serde_fraction {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(f: &Fraction, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fraction_string(f))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Fraction, D::Error> {
        let s = String::deserialize(d)?;
        parse_fraction(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a [`BigRational`] as `"num/den"` (or an integer string).
pub mod serde_big {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&big_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        let parse = |x: &str| x.trim().parse::<BigInt>().map_err(serde::de::Error::custom);
        match s.split_once('/') {
            Some((a, b)) => Ok(BigRational::new(parse(a)?, parse(b)?)),
            None => Ok(BigRational::from_integer(parse(&s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(parse_fraction("0.7").unwrap(), Ratio::new(7, 10));
        assert_eq!(parse_fraction("7/10").unwrap(), Ratio::new(7, 10));
        assert_eq!(parse_fraction("2").unwrap(), Ratio::from_integer(2));
        assert_eq!(parse_fraction(".5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_fraction("1.25").unwrap(), Ratio::new(5, 4));
        for bad in ["", ".", "-1", "1/0", "abc", "1e3"] {
            assert!(parse_fraction(bad).is_err(), "{bad}");
        }
    }
}
