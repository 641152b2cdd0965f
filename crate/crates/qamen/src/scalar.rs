//! Exact scalars over the rationals or a prime field.
//!
//! Every value is kept in canonical form: rationals in lowest terms with
//! positive denominator, prime-field values reduced into `[0, p)`.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The exact field a matrix or polynomial lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Builds a prime-field spec, verifying primality.
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::InvalidInput(format!("{p} is not prime")))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Fp { p: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Fp { p: *p, value: 1 },
        }
    }

    /// Embeds a signed integer.
    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, value: r }
            }
        }
    }

    /// Parses the serialized string form: "a/b" or "a" for rationals,
    /// a decimal in `[0, p)` for prime fields.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a, b),
                    None => (s, "1"),
                };
                let n: BigInt = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                let d: BigInt = den
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Rat(BigRational::new(n, d)))
            }
            FieldSpec::PrimeField(p) => {
                let v: u64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad prime field value {s:?}")))?;
                if v >= *p {
                    return Err(Error::Parse(format!("{v} out of range for GF({p})")));
                }
                Ok(Scalar::Fp { p: *p, value: v })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            kind: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            p: Option<u64>,
        }
        let r = match self {
            FieldSpec::Rationals => Repr { kind: "Q", p: None },
            FieldSpec::PrimeField(p) => Repr {
                kind: "GF",
                p: Some(*p),
            },
        };
        r.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            kind: String,
            p: Option<u64>,
        }
        let r = Repr::deserialize(d)?;
        match r.kind.as_str() {
            "Q" => Ok(FieldSpec::Rationals),
            "GF" => {
                let p = r.p.ok_or_else(|| serde::de::Error::custom("GF needs p"))?;
                FieldSpec::prime_field(p).map_err(serde::de::Error::custom)
            }
            other => Err(serde::de::Error::custom(format!("unknown field kind {other:?}"))),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|sq| sq <= n).unwrap_or(false) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// One exact field element. Arithmetic between scalars of different fields is
/// a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) => {
                assert_eq!(p, q, "scalar field mismatch");
                Scalar::Fp {
                    p: *p,
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, value } => Scalar::Fp {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) => {
                assert_eq!(p, q, "scalar field mismatch");
                Scalar::Fp {
                    p: *p,
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverting zero");
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { p, value } => Scalar::Fp {
                p: *p,
                value: mod_inverse(*value, *p),
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut t0, mut t1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "element not invertible");
    t0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Exact rational helper used for epsilon bookkeeping.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "a/b" or "a" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Formats an exact rational in the "a/b" convention.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Smallest integer >= r.
pub fn ceil_rational(r: &BigRational) -> BigInt {
    let f = r.floor();
    if &f == r {
        f.to_integer()
    } else {
        f.to_integer() + 1
    }
}

pub fn rational_is_positive(r: &BigRational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(97).is_ok());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(91).is_err()); // 7 * 13
    }

    #[test]
    fn rational_round_trip() {
        let f = FieldSpec::Rationals;
        for s in ["3/4", "-2/5", "7", "0"] {
            let v = f.parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
        // reduction to lowest terms with positive denominator
        let v = f.parse("2/4").unwrap();
        assert_eq!(v.to_string(), "1/2");
        let v = f.parse("3/-6").unwrap();
        assert_eq!(v.to_string(), "-1/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime_field(5).unwrap();
        let a = f.from_int(3);
        let b = f.from_int(4);
        assert_eq!(a.add(&b), f.from_int(2));
        assert_eq!(a.mul(&b), f.from_int(2));
        assert_eq!(a.inv(), f.from_int(2)); // 3 * 2 = 6 = 1 mod 5
        assert_eq!(a.neg(), f.from_int(2));
    }

    #[test]
    fn ceil_of_rationals() {
        assert_eq!(ceil_rational(&rational(1, 2)), BigInt::from(1));
        assert_eq!(ceil_rational(&rational(4, 2)), BigInt::from(2));
        assert_eq!(ceil_rational(&rational(-1, 2)), BigInt::from(0));
    }
}
