//! Exact rationals over 64-bit integers with checked arithmetic.
//!
//! Intermediate products are formed in 128 bits and reduced before being
//! narrowed back, so an operation only fails when the reduced result itself
//! does not fit in 64 bits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A reduced fraction `numer / denom` with `denom > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: i64,
    denom: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { numer: 0, denom: 1 };
    pub const ONE: Rational = Rational { numer: 1, denom: 1 };

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        Self::from_wide(numer as i128, denom as i128)
    }

    pub const fn from_integer(n: i64) -> Self {
        Rational { numer: n, denom: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    fn from_wide(numer: i128, denom: i128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let g = numer.gcd(&denom);
        let (mut n, mut d) = (numer / g, denom / g);
        if d < 0 {
            n = n.checked_neg().ok_or(Error::Overflow)?;
            d = d.checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(Rational {
            numer: i64::try_from(n).map_err(|_| Error::Overflow)?,
            denom: i64::try_from(d).map_err(|_| Error::Overflow)?,
        })
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        self.wide_add(rhs, false).ok()
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        self.wide_add(rhs, true).ok()
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        self.wide_mul(rhs).ok()
    }

    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        self.wide_div(rhs).ok()
    }

    fn wide_add(self, rhs: Self, negate: bool) -> Result<Self> {
        let (a, b) = (self.numer as i128, self.denom as i128);
        let (mut c, d) = (rhs.numer as i128, rhs.denom as i128);
        if negate {
            c = -c;
        }
        // |a|,|c| < 2^63 and b,d < 2^63, so a*d + c*b fits in i128.
        let g = b.gcd(&d);
        let numer = a * (d / g) + c * (b / g);
        let denom = (b / g) * d;
        Self::from_wide(numer, denom)
    }

    fn wide_mul(self, rhs: Self) -> Result<Self> {
        let g1 = (self.numer as i128).gcd(&(rhs.denom as i128));
        let g2 = (rhs.numer as i128).gcd(&(self.denom as i128));
        let numer = (self.numer as i128 / g1) * (rhs.numer as i128 / g2);
        let denom = (self.denom as i128 / g2) * (rhs.denom as i128 / g1);
        Self::from_wide(numer, denom)
    }

    fn wide_div(self, rhs: Self) -> Result<Self> {
        if rhs.numer == 0 {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        let inv = Self::from_wide(rhs.denom as i128, rhs.numer as i128)?;
        self.wide_mul(inv)
    }
}

impl Scalar for Rational {
    fn try_add(self, rhs: Self) -> Result<Self> {
        self.wide_add(rhs, false)
    }
    fn try_sub(self, rhs: Self) -> Result<Self> {
        self.wide_add(rhs, true)
    }
    fn try_mul(self, rhs: Self) -> Result<Self> {
        self.wide_mul(rhs)
    }
    fn try_div(self, rhs: Self) -> Result<Self> {
        self.wide_div(rhs)
    }
    fn from_ratio(numer: i64, denom: i64) -> Result<Self> {
        Rational::new(numer, denom)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Rational::new(p, q)
            }
            None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numer as i128 * other.denom as i128;
        let rhs = other.numer as i128 * self.denom as i128;
        lhs.cmp(&rhs)
    }
}

// Operator impls panic on overflow, like debug-mode integer arithmetic.
// Library code uses the `Scalar::try_*` methods instead.
macro_rules! panicking_op {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                match Scalar::$imp(self, rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("rational {}: {e}", stringify!($method)),
                }
            }
        }
    };
}

panicking_op!(Add, add, try_add);
panicking_op!(Sub, sub, try_sub);
panicking_op!(Mul, mul, try_mul);
panicking_op!(Div, div, try_div);

impl Rem for Rational {
    type Output = Rational;
    fn rem(self, rhs: Rational) -> Rational {
        let q = self / rhs;
        let trunc = Rational::from_integer(q.numer / q.denom);
        self - rhs * trunc
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            numer: self.numer.checked_neg().expect("rational negation overflow"),
            denom: self.denom,
        }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn is_zero(&self) -> bool {
        self.numer == 0
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::ONE
    }
}

impl Num for Rational {
    type FromStrRadixErr = Error;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self> {
        if radix == 10 {
            return s.parse();
        }
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        let (p, q) = s.split_once('/').unwrap_or((s, "1"));
        let p = i64::from_str_radix(p, radix).map_err(|_| bad())?;
        let q = i64::from_str_radix(q, radix).map_err(|_| bad())?;
        Rational::new(p, q)
    }
}

impl Signed for Rational {
    fn abs(&self) -> Self {
        if self.numer < 0 {
            -*self
        } else {
            *self
        }
    }
    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Rational::ZERO
        } else {
            *self - *other
        }
    }
    fn signum(&self) -> Self {
        Rational::from_integer(self.numer.signum())
    }
    fn is_positive(&self) -> bool {
        self.numer > 0
    }
    fn is_negative(&self) -> bool {
        self.numer < 0
    }
}

impl FromPrimitive for Rational {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Rational::from_integer(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        i64::try_from(n).ok().map(Rational::from_integer)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        let x = r(6, -4);
        assert_eq!((x.numer(), x.denom()), (-3, 2));
        assert_eq!(r(0, -7), Rational::ZERO);
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(r(28, 1).to_string(), "28/1");
        assert_eq!(r(49, 16).to_string(), "49/16");
        assert_eq!("7/8".parse::<Rational>().unwrap(), r(7, 8));
        assert_eq!("-14".parse::<Rational>().unwrap(), r(-14, 1));
        assert_eq!(" 4 / 6 ".parse::<Rational>().unwrap(), r(2, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn overflow_is_an_error() {
        let max = Rational::from_integer(i64::MAX);
        assert!(max.checked_add(Rational::ONE).is_none());
        assert!(max.checked_mul(r(2, 1)).is_none());
        assert!(Rational::from_integer(i64::MIN).checked_sub(Rational::ONE).is_none());
        // reduction keeps this representable even though max*max overflows
        assert_eq!(max.checked_mul(r(1, i64::MAX)), Some(Rational::ONE));
        assert!(r(1, 2).checked_div(Rational::ZERO).is_none());
    }

    #[test]
    fn ordering() {
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(-1, 3));
        assert_eq!(r(2, 4).cmp(&r(1, 2)), Ordering::Equal);
    }

    #[test]
    fn serde_as_string() {
        let json = serde_json::to_string(&r(5, 4)).unwrap();
        assert_eq!(json, "\"5/4\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r(5, 4));
    }

    proptest! {
        #[test]
        fn field_laws(a in -1000i64..1000, b in 1i64..50, c in -1000i64..1000, d in 1i64..50) {
            let x = r(a, b);
            let y = r(c, d);
            prop_assert_eq!(x + y - y, x);
            prop_assert_eq!(x * y, y * x);
            if !y.is_zero() {
                prop_assert_eq!(x / y * y, x);
            }
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
            prop_assert!(x.denom() > 0);
            prop_assert_eq!(x.numer().gcd(&x.denom()), 1);
        }
    }
}
