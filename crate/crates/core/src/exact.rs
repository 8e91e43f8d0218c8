//! Exact rational arithmetic helpers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(x: usize) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Smallest integer `>= x`, for nonnegative `x` that fits in `usize`.
pub fn ceil_usize(x: &Rational) -> Option<usize> {
    x.ceil().to_integer().to_usize()
}

/// `(1 - x) / (1 + x) >= 1 - 2x`, evaluated exactly. Holds for every `x >= 0`.
pub fn ratio_inequality_holds(x: &Rational) -> bool {
    let one = Rational::one();
    (&one - x) / (&one + x) >= &one - x * int(2)
}

pub fn serialize_rational<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EpsilonError {
    #[error("cannot parse `{0}` as a decimal or fraction")]
    Parse(String),
    #[error("epsilon must lie in (0, 1], got {0}")]
    OutOfRange(String),
}

/// Approximation slack `ε ∈ (0, 1]`, held exactly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Epsilon(Rational);

impl Epsilon {
    pub fn new(value: Rational) -> Result<Self, EpsilonError> {
        if value.is_positive() && value <= Rational::one() {
            Ok(Epsilon(value))
        } else {
            Err(EpsilonError::OutOfRange(value.to_string()))
        }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self, EpsilonError> {
        if denom == 0 {
            return Err(EpsilonError::Parse(format!("{numer}/{denom}")));
        }
        Self::new(rat(numer, denom))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.0)
    }

    /// `2/3 - ε`.
    pub fn threshold(&self) -> Rational {
        rat(2, 3) - &self.0
    }
}

impl FromStr for Epsilon {
    type Err = EpsilonError;

    /// Accepts `0.25`, `.5`, `1`, or `1/4`; decimals are read exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || EpsilonError::Parse(s.to_owned());
        let value = if let Some((a, b)) = s.split_once('/') {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Rational::new(a, b)
        } else {
            let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
            if (whole.is_empty() && frac.is_empty())
                || !whole.chars().all(|c| c.is_ascii_digit())
                || !frac.chars().all(|c| c.is_ascii_digit())
            {
                return Err(bad());
            }
            let digits = format!("{whole}{frac}");
            let numer: BigInt = digits.parse().map_err(|_| bad())?;
            let denom = num_traits::pow(BigInt::from(10), frac.len());
            Rational::new(numer, denom)
        };
        Epsilon::new(value)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Decimal when exact within 12 places, fraction otherwise.
        let scaled = &self.0 * int(1_000_000_000_000);
        if scaled.is_integer() {
            let v = scaled.to_integer();
            let s = format!("{:0>13}", v);
            let (i, frac) = s.split_at(s.len() - 12);
            let frac = frac.trim_end_matches('0');
            if frac.is_empty() {
                write!(f, "{}", i.trim_start_matches('0').max("0"))
            } else {
                let i = i.trim_start_matches('0');
                write!(f, "{}.{}", if i.is_empty() { "0" } else { i }, frac)
            }
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for Epsilon {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!("0.5".parse::<Epsilon>().unwrap().value(), &rat(1, 2));
        assert_eq!("0.2".parse::<Epsilon>().unwrap().value(), &rat(1, 5));
        assert_eq!(".1".parse::<Epsilon>().unwrap().value(), &rat(1, 10));
        assert_eq!("1".parse::<Epsilon>().unwrap().value(), &rat(1, 1));
        assert_eq!("1/3".parse::<Epsilon>().unwrap().value(), &rat(1, 3));
        assert!("0".parse::<Epsilon>().is_err());
        assert!("1.01".parse::<Epsilon>().is_err());
        assert!("-0.5".parse::<Epsilon>().is_err());
        assert!("abc".parse::<Epsilon>().is_err());
        assert!(".".parse::<Epsilon>().is_err());
        assert!("1/0".parse::<Epsilon>().is_err());
    }

    #[test]
    fn display() {
        for s in ["0.5", "0.2", "1", "0.125"] {
            assert_eq!(s.parse::<Epsilon>().unwrap().to_string(), s);
        }
        assert_eq!("1/3".parse::<Epsilon>().unwrap().to_string(), "1/3");
    }

    #[test]
    fn ratio_inequality_on_grid() {
        // x = k/100 for k in 0..=1000 covers [0, 10]
        for k in 0..=1000 {
            assert!(ratio_inequality_holds(&rat(k, 100)), "x = {k}/100");
        }
        assert!(ratio_inequality_holds(&rat(1, 3)));
    }

    #[test]
    fn ceiling() {
        assert_eq!(ceil_usize(&rat(50, 1)), Some(50));
        assert_eq!(ceil_usize(&rat(101, 2)), Some(51));
    }
}
