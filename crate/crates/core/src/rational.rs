//! Exact rational coefficients and their string form (`"p/q"` or `"p"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad(t))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad(t))?;
            if d.is_zero() {
                return Err(Error::Invalid(format!("zero denominator in `{t}`")));
            }
            Q::new(n, d)
        }
        None => Q::from_integer(t.parse().map_err(|_| bad(t))?),
    };
    Ok(parsed)
}

fn bad(t: &str) -> Error {
    Error::Invalid(format!("not a rational: `{t}`"))
}

pub fn format_q(x: &Q) -> String {
    x.to_string()
}

/// Serde adapter storing rationals as strings.
pub mod serde_q {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }

    pub fn serialize_vec<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(format_q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_q("-2/4").unwrap(), frac(-1, 2));
        assert_eq!(parse_q(" 7 ").unwrap(), q(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert_eq!(format_q(&frac(3, -6)), "-1/2");
    }
}
