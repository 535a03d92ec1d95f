//! Exact coefficient rings.
//!
//! Four rings are supported: the rationals, the integers, the integers with 3
//! inverted, and prime fields. Every [`Scalar`] is kept in a canonical form so
//! that structural equality is ring equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::InvalidModulus(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// The coefficient ring of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Rationals,
    Integers,
    /// ℤ[1/3]
    IntegersLoc3,
    PrimeField(Prime),
}

impl RingSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        Ok(RingSpec::PrimeField(Prime::new(p)?))
    }

    /// True iff `3 = 1 + 1 + 1` is a unit.
    pub fn three_invertible(&self) -> bool {
        match self {
            RingSpec::Rationals | RingSpec::IntegersLoc3 => true,
            RingSpec::Integers => false,
            RingSpec::PrimeField(p) => p.get() != 3,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingSpec::Rationals | RingSpec::PrimeField(_))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            RingSpec::PrimeField(p) => Some(p.get()),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            RingSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            RingSpec::Integers => Scalar::Integer(n.clone()),
            RingSpec::IntegersLoc3 => Scalar::Loc3(BigRational::from_integer(n.clone())),
            RingSpec::PrimeField(p) => Scalar::Residue {
                value: reduce_big(n, p.get()),
                modulus: p.get(),
            },
        }
    }

    /// The image of `num/den` in this ring, if it exists.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::ScalarSyntax(format!("{num}/{den}")));
        }
        let q = BigRational::new(num.clone(), den.clone());
        self.from_rational(&q)
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        let not_in = || Error::NotInRing {
            value: q.to_string(),
            ring: *self,
        };
        match self {
            RingSpec::Rationals => Ok(Scalar::Rational(q.clone())),
            RingSpec::Integers => {
                if q.is_integer() {
                    Ok(Scalar::Integer(q.to_integer()))
                } else {
                    Err(not_in())
                }
            }
            RingSpec::IntegersLoc3 => {
                if is_power_of_three(q.denom()) {
                    Ok(Scalar::Loc3(q.clone()))
                } else {
                    Err(not_in())
                }
            }
            RingSpec::PrimeField(p) => {
                let p = p.get();
                let d = reduce_big(q.denom(), p);
                if d == 0 {
                    return Err(not_in());
                }
                let n = reduce_big(q.numer(), p);
                Ok(Scalar::Residue {
                    value: mul_mod(n, inv_mod(d, p), p),
                    modulus: p,
                })
            }
        }
    }

    /// Parses the scalar text form: `"-12"`, `"3/9"`, or a residue.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let bad = || Error::ScalarSyntax(text.to_string());
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (
                BigInt::from_str(a.trim()).map_err(|_| bad())?,
                BigInt::from_str(b.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(t).map_err(|_| bad())?, BigInt::one()),
        };
        self.from_ratio(&num, &den)
    }

    fn check(&self, s: &Scalar) -> Result<()> {
        if s.ring() == *self {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: *self,
                right: s.ring(),
            })
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersLoc3 => write!(f, "Z3loc"),
            RingSpec::PrimeField(p) => write!(f, "Fp:{}", p.get()),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Accepts the CLI spellings (`Q`, `Z`, `Z3loc`, `Fp:<p>`) and the long
    /// names used in algebra files.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "Q" | "Rationals" => Ok(RingSpec::Rationals),
            "Z" | "Integers" => Ok(RingSpec::Integers),
            "Z3loc" | "IntegersLoc3" => Ok(RingSpec::IntegersLoc3),
            _ => {
                let p = t
                    .strip_prefix("Fp:")
                    .or_else(|| t.strip_prefix("GF:"))
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown ring {t:?}")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad modulus in {t:?}")))?;
                RingSpec::prime_field(p)
            }
        }
    }
}

/// A ring element in canonical form.
///
/// The variant determines the ring, so mixed-ring arithmetic is detected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Integer(BigInt),
    /// Reduced fraction whose denominator is a power of 3.
    Loc3(BigRational),
    Residue {
        value: u64,
        modulus: u64,
    },
}

impl Scalar {
    pub fn ring(&self) -> RingSpec {
        match self {
            Scalar::Rational(_) => RingSpec::Rationals,
            Scalar::Integer(_) => RingSpec::Integers,
            Scalar::Loc3(_) => RingSpec::IntegersLoc3,
            Scalar::Residue { modulus, .. } => RingSpec::PrimeField(Prime(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) | Scalar::Loc3(q) => q.is_zero(),
            Scalar::Integer(n) => n.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) | Scalar::Loc3(q) => q.is_one(),
            Scalar::Integer(n) => n.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// The value as a rational number; residues map to their representative
    /// in `[0, p)`.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(q) | Scalar::Loc3(q) => q.clone(),
            Scalar::Integer(n) => BigRational::from_integer(n.clone()),
            Scalar::Residue { value, .. } => BigRational::from_integer(BigInt::from(*value)),
        }
    }

    /// Sign used by the text renderer: residues are always rendered
    /// non-negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) | Scalar::Loc3(q) => q.is_negative(),
            Scalar::Integer(n) => n.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.ring().check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.ring().check(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.ring().check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Integer(n) => Scalar::Integer(-n),
            Scalar::Loc3(q) => Scalar::Loc3(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse, or [`Error::NotInvertible`].
    pub fn invert(&self) -> Result<Scalar> {
        let fail = || Error::NotInvertible {
            value: self.to_string(),
            ring: self.ring(),
        };
        if self.is_zero() {
            return Err(fail());
        }
        match self {
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Integer(n) => {
                if n.abs().is_one() {
                    Ok(self.clone())
                } else {
                    Err(fail())
                }
            }
            Scalar::Loc3(q) => {
                if is_power_of_three(&q.numer().abs()) {
                    Ok(Scalar::Loc3(q.recip()))
                } else {
                    Err(fail())
                }
            }
            Scalar::Residue { value, modulus } => Ok(Scalar::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            }),
        }
    }

    pub(crate) fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            (Scalar::Loc3(a), Scalar::Loc3(b)) => Scalar::Loc3(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: add_mod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => panic!("scalar ring mismatch: {} vs {}", self.ring(), other.ring()),
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            (Scalar::Loc3(a), Scalar::Loc3(b)) => Scalar::Loc3(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: mul_mod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => panic!("scalar ring mismatch: {} vs {}", self.ring(), other.ring()),
        }
    }

    /// Re-establishes canonical form. Values built through this module are
    /// already canonical; this is used on externally assembled data.
    pub fn canonicalize(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(BigRational::new(q.numer().clone(), q.denom().clone())),
            Scalar::Loc3(q) => Scalar::Loc3(BigRational::new(q.numer().clone(), q.denom().clone())),
            Scalar::Integer(n) => Scalar::Integer(n.clone()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: value % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) | Scalar::Loc3(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Integer(n) => write!(f, "{n}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Wire form of a ring: `{"kind": "...", "p": 5}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl RingDoc {
    pub fn to_ring(&self) -> Result<RingSpec> {
        match self.kind.as_str() {
            "PrimeField" | "Fp" | "GF" => {
                let p = self
                    .p
                    .ok_or_else(|| Error::Schema("PrimeField ring needs \"p\"".into()))?;
                RingSpec::prime_field(p)
            }
            other => {
                if self.p.is_some() {
                    return Err(Error::Schema(format!("ring {other} takes no modulus")));
                }
                other.parse()
            }
        }
    }

    pub fn from_ring(ring: &RingSpec) -> Self {
        match ring {
            RingSpec::Rationals => RingDoc {
                kind: "Rationals".into(),
                p: None,
            },
            RingSpec::Integers => RingDoc {
                kind: "Integers".into(),
                p: None,
            },
            RingSpec::IntegersLoc3 => RingDoc {
                kind: "IntegersLoc3".into(),
                p: None,
            },
            RingSpec::PrimeField(p) => RingDoc {
                kind: "PrimeField".into(),
                p: Some(p.get()),
            },
        }
    }
}

pub(crate) fn is_power_of_three(n: &BigInt) -> bool {
    if !n.is_positive() {
        return false;
    }
    let three = BigInt::from(3);
    let mut m = n.clone();
    while (&m % &three).is_zero() {
        m /= &three;
    }
    m.is_one()
}

pub(crate) fn reduce_big(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Inverse modulo a prime; `a` must be nonzero mod `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
