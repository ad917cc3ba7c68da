//! The integer type carried by diamonds and friezes.
//!
//! Every entry of a diamond or a frieze is a positive integer, and the
//! entries grow quickly with the rank. The arithmetic is written once over
//! [`Entry`] and instantiated either with a machine integer (checked, so an
//! overflow surfaces as an error instead of wrapping) or with an
//! arbitrary-precision integer that never overflows.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive};

/// Exact integer scalar usable as a diamond or frieze entry.
pub trait Entry:
    Integer
    + Clone
    + Hash
    + Debug
    + Display
    + CheckedAdd
    + CheckedMul
    + CheckedSub
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Entry for T where
    T: Integer
        + Clone
        + Hash
        + Debug
        + Display
        + CheckedAdd
        + CheckedMul
        + CheckedSub
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Raised when a machine-integer instantiation cannot hold a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("integer overflow")]
pub struct Overflow;

pub(crate) fn add<T: Entry>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_add(b).ok_or(Overflow)
}

pub(crate) fn mul<T: Entry>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_mul(b).ok_or(Overflow)
}

pub(crate) fn from_usize<T: Entry>(x: usize) -> Result<T, Overflow> {
    T::from_usize(x).ok_or(Overflow)
}

pub(crate) fn is_positive<T: Entry>(x: &T) -> bool {
    *x >= T::one()
}
