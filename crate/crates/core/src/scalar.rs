//! Scalar types used for weights and moments.
//!
//! Every formula in this crate is written once against [`Scalar`]. The exact
//! instantiation is [`Rational`](crate::Rational); `f64` and `f32` are
//! supported for quick numeric work where exact equality is not needed.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

use crate::error::{Error, Result};

/// Numeric carrier for weights and moments.
///
/// Arithmetic used by the library goes through the `try_*` methods so that an
/// exact type can report overflow instead of wrapping. Floating point types
/// report a non-finite result as overflow.
pub trait Scalar:
    Num + Signed + FromPrimitive + Copy + PartialOrd + Debug + Display + Send + Sync + 'static
{
    fn try_add(self, rhs: Self) -> Result<Self>;
    fn try_sub(self, rhs: Self) -> Result<Self>;
    fn try_mul(self, rhs: Self) -> Result<Self>;
    fn try_div(self, rhs: Self) -> Result<Self>;

    /// The value `numer / denom`.
    fn from_ratio(numer: i64, denom: i64) -> Result<Self>;

    fn from_count(n: usize) -> Result<Self> {
        Self::from_usize(n).ok_or(Error::Overflow)
    }

    fn half() -> Self {
        Self::from_ratio(1, 2).expect("1/2 is representable")
    }
}

/// Checked sum of an iterator of scalars.
pub fn try_sum<S: Scalar>(iter: impl IntoIterator<Item = S>) -> Result<S> {
    iter.into_iter().try_fold(S::zero(), S::try_add)
}

/// Checked sum of an iterator of fallible scalars.
pub fn try_sum_results<S: Scalar>(iter: impl IntoIterator<Item = Result<S>>) -> Result<S> {
    iter.into_iter().try_fold(S::zero(), |acc, x| acc.try_add(x?))
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn try_add(self, rhs: Self) -> Result<Self> {
                finite(self + rhs)
            }
            fn try_sub(self, rhs: Self) -> Result<Self> {
                finite(self - rhs)
            }
            fn try_mul(self, rhs: Self) -> Result<Self> {
                finite(self * rhs)
            }
            fn try_div(self, rhs: Self) -> Result<Self> {
                if rhs == 0.0 {
                    return Err(Error::InvalidArgument("division by zero".into()));
                }
                finite(self / rhs)
            }
            fn from_ratio(numer: i64, denom: i64) -> Result<Self> {
                if denom == 0 {
                    return Err(Error::InvalidArgument("zero denominator".into()));
                }
                Ok(numer as $t / denom as $t)
            }
        }
    };
}

fn finite<T: num_traits::Float>(x: T) -> Result<T> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Overflow)
    }
}

float_scalar!(f32);
float_scalar!(f64);
