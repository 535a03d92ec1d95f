//! Integer kernels run first on `i64` with checked arithmetic and are re-run
//! on `BigInt` when any intermediate overflows.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Marker returned when an `i64` computation would overflow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Overflow;

pub type Checked<T> = Result<T, Overflow>;

pub trait LinInt: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn from_big(b: &BigInt) -> Checked<Self>;
    fn from_i64(v: i64) -> Self;
    fn to_big(&self) -> BigInt;
    fn to_i64(&self) -> Option<i64>;
    fn add(&self, o: &Self) -> Checked<Self>;
    fn sub(&self, o: &Self) -> Checked<Self>;
    fn mul(&self, o: &Self) -> Checked<Self>;
    fn neg(&self) -> Checked<Self>;
    /// `a*x + b*y`
    fn lin2(a: &Self, x: &Self, b: &Self, y: &Self) -> Checked<Self>;
    /// Exact quotient; `o` must divide `self`.
    fn div_exact(&self, o: &Self) -> Checked<Self>;
    /// Floor division for positive `o`.
    fn div_floor(&self, o: &Self) -> Checked<Self>;
    fn divides(&self, o: &Self) -> bool;
    /// Non-negative gcd.
    fn gcd(&self, o: &Self) -> Checked<Self>;
    /// `(g, s, t)` with `s*self + t*o = g = gcd >= 0`.
    fn ext_gcd(&self, o: &Self) -> Checked<(Self, Self, Self)>;

    fn abs(&self) -> Checked<Self> {
        if self.is_negative() {
            self.neg()
        } else {
            Ok(self.clone())
        }
    }
}

impl LinInt for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn from_big(b: &BigInt) -> Checked<Self> {
        ToPrimitive::to_i64(b).filter(|v| *v != i64::MIN).ok_or(Overflow)
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn to_i64(&self) -> Option<i64> {
        Some(*self)
    }
    fn add(&self, o: &Self) -> Checked<Self> {
        self.checked_add(*o).ok_or(Overflow)
    }
    fn sub(&self, o: &Self) -> Checked<Self> {
        self.checked_sub(*o).ok_or(Overflow)
    }
    fn mul(&self, o: &Self) -> Checked<Self> {
        self.checked_mul(*o).ok_or(Overflow)
    }
    fn neg(&self) -> Checked<Self> {
        self.checked_neg().ok_or(Overflow)
    }
    fn lin2(a: &Self, x: &Self, b: &Self, y: &Self) -> Checked<Self> {
        let v = *a as i128 * *x as i128 + *b as i128 * *y as i128;
        if v > i64::MAX as i128 || v <= i64::MIN as i128 {
            Err(Overflow)
        } else {
            Ok(v as i64)
        }
    }
    fn div_exact(&self, o: &Self) -> Checked<Self> {
        self.checked_div(*o).ok_or(Overflow)
    }
    fn div_floor(&self, o: &Self) -> Checked<Self> {
        self.checked_div_euclid(*o).ok_or(Overflow)
    }
    fn divides(&self, o: &Self) -> bool {
        if *self == 0 {
            *o == 0
        } else {
            o.checked_rem(*self).is_none_or(|r| r == 0)
        }
    }
    fn gcd(&self, o: &Self) -> Checked<Self> {
        let (mut a, mut b) = (self.unsigned_abs(), o.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        i64::try_from(a).map_err(|_| Overflow)
    }
    fn ext_gcd(&self, o: &Self) -> Checked<(Self, Self, Self)> {
        let (mut r0, mut r1) = (*self as i128, *o as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0.div_euclid(r1);
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 < 0 {
            (r0, s0, t0) = (-r0, -s0, -t0);
        }
        let fit = |v: i128| i64::try_from(v).map_err(|_| Overflow);
        Ok((fit(r0)?, fit(s0)?, fit(t0)?))
    }
}

impl LinInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn from_big(b: &BigInt) -> Checked<Self> {
        Ok(b.clone())
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn to_i64(&self) -> Option<i64> {
        ToPrimitive::to_i64(self)
    }
    fn add(&self, o: &Self) -> Checked<Self> {
        Ok(self + o)
    }
    fn sub(&self, o: &Self) -> Checked<Self> {
        Ok(self - o)
    }
    fn mul(&self, o: &Self) -> Checked<Self> {
        Ok(self * o)
    }
    fn neg(&self) -> Checked<Self> {
        Ok(-self)
    }
    fn lin2(a: &Self, x: &Self, b: &Self, y: &Self) -> Checked<Self> {
        Ok(a * x + b * y)
    }
    fn div_exact(&self, o: &Self) -> Checked<Self> {
        Ok(self / o)
    }
    fn div_floor(&self, o: &Self) -> Checked<Self> {
        Ok(Integer::div_floor(self, o))
    }
    fn divides(&self, o: &Self) -> bool {
        if Zero::is_zero(self) {
            Zero::is_zero(o)
        } else {
            Zero::is_zero(&(o % self))
        }
    }
    fn gcd(&self, o: &Self) -> Checked<Self> {
        Ok(Integer::gcd(self, o))
    }
    fn ext_gcd(&self, o: &Self) -> Checked<(Self, Self, Self)> {
        let e = self.extended_gcd(o);
        let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
        if Signed::is_negative(&g) {
            g = -g;
            s = -s;
            t = -t;
        }
        Ok((g, s, t))
    }
}

/// Converts between integer representations.
pub fn cast<S: LinInt, T: LinInt>(x: &S) -> Checked<T> {
    match x.to_i64() {
        Some(v) if v != i64::MIN => Ok(T::from_i64(v)),
        _ => T::from_big(&x.to_big()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_agrees() {
        for (a, b) in [(12i64, 18i64), (-4, 6), (0, 5), (7, 0), (-9, -6), (1, 1)] {
            let (g, s, t) = a.ext_gcd(&b).unwrap();
            assert_eq!(s * a + t * b, g);
            assert!(g >= 0);
            let (gb, sb, tb) = BigInt::from(a).ext_gcd(&BigInt::from(b)).unwrap();
            assert_eq!(gb, BigInt::from(g));
            assert_eq!(sb * a + tb * b, gb);
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(i64::MAX.add(&1), Err(Overflow));
        assert_eq!(LinInt::mul(&(1i64 << 40), &(1i64 << 40)), Err(Overflow));
        assert!(i64::from_big(&(BigInt::from(1) << 70)).is_err());
        assert_eq!(i64::lin2(&3, &4, &-2, &5), Ok(2));
    }

    #[test]
    fn floor_division() {
        assert_eq!(LinInt::div_floor(&-7i64, &2), Ok(-4));
        assert_eq!(
            LinInt::div_floor(&BigInt::from(-7), &BigInt::from(2)),
            Ok(BigInt::from(-4))
        );
    }
}
