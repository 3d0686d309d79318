use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Exact integer types usable in chain complexes and Smith normal form.
///
/// Fixed-width types report [`Error::Overflow`] through the checked
/// operations; [`BigInt`] never does.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("every i64 fits an exact integer type")
    }

    fn to_bigint(&self) -> BigInt {
        match self.to_i64() {
            Some(v) => BigInt::from(v),
            None => self.to_string().parse().expect("integers print as decimal"),
        }
    }
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Debug + Display + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + ToPrimitive + Send + Sync
{
}

pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `a - q * b`
pub(crate) fn sub_mul<T: Scalar>(a: &T, q: &T, b: &T) -> Result<T> {
    sub(a, &mul(q, b)?)
}
