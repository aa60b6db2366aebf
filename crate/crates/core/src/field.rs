//! Scalar abstractions shared by every matrix routine.
//!
//! [`Ring`] is enough for products, sums and Kronecker products (it is what
//! symbolic polynomial matrices implement). [`Field`] adds exact inversion and
//! is required by anything that eliminates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};

/// A commutative ring with identity and structural equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A field whose zero test is exact.
///
/// Elimination picks the first entry for which `is_zero` is false, so for
/// floating point types the routines are only meaningful on data that is
/// exactly representable (small integers, dyadic fractions).
pub trait Field: Ring + FromPrimitive + fmt::Display {
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every field contains the integers")
    }
}

impl Field for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for f64 {
    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

impl Field for f32 {
    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}
