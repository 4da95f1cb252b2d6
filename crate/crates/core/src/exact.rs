//! Exact scalars. Every count is an [`ExactInteger`] and every probability or
//! expectation an [`ExactRational`]; nothing in the library goes through floats.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type ExactInteger = BigInt;
pub type ExactRational = BigRational;

pub fn int(v: impl Into<BigInt>) -> ExactInteger {
    v.into()
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

pub fn to_rational(v: &ExactInteger) -> ExactRational {
    BigRational::from_integer(v.clone())
}

/// Divides `num` by `den`, failing unless the division is exact.
pub fn div_exact(num: &BigInt, den: &BigInt) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::InexactDivision(format!("{num} / 0")));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!("{num} / {den}")));
    }
    Ok(q)
}

/// Converts a rational known to be integral; a fractional value is an internal error.
pub fn into_integer(v: &ExactRational, what: &str) -> Result<ExactInteger> {
    if v.denom().is_one() {
        Ok(v.numer().clone())
    } else {
        Err(Error::InexactDivision(format!("{what} evaluated to {v}")))
    }
}

/// Renders an exact value as `p/q`, or `p` when integral.
pub fn format_rational(v: &ExactRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse_integer(s: &str) -> Result<ExactInteger> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
}

pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_integer(s)?)),
        Some((p, q)) => {
            let q = parse_integer(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_integer(p)?, q))
        }
    }
}

pub fn sign(negative: bool) -> ExactInteger {
    if negative {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

pub fn is_negative(v: &ExactRational) -> bool {
    v.is_negative()
}

/// Serde adapters storing exact values as decimal strings.
pub mod serde_str {
    pub mod integer {
        use num_bigint::BigInt;
        use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&v.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            let s = String::deserialize(d)?;
            s.parse().map_err(D::Error::custom)
        }
    }

    pub mod rational {
        use num_rational::BigRational;
        use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&super::super::format_rational(v))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
            let s = String::deserialize(d)?;
            super::super::parse_rational(&s).map_err(D::Error::custom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        assert_eq!(div_exact(&int(12), &int(4)).unwrap(), int(3));
        assert!(matches!(div_exact(&int(13), &int(4)), Err(Error::InexactDivision(_))));
        assert!(div_exact(&int(1), &int(0)).is_err());
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&ratio(22, 36)), "11/18");
        assert_eq!(format_rational(&ratio(-4, 2)), "-2");
        assert_eq!(parse_rational("11/18").unwrap(), ratio(11, 18));
        assert_eq!(parse_rational(" 7 ").unwrap(), ratio(7, 1));
        assert!(parse_rational("1/0").is_err());
    }
}
