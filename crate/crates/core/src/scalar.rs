//! Scalar traits shared by the quaternion, matrix and linear-algebra code.
//!
//! Everything above this module is written against [`Ring`] / [`Field`] so
//! the same code runs over the exact golden field, plain rationals, or
//! `f32`/`f64` when a quick numeric sanity check is all that is wanted.

use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// A commutative ring with unit.
///
/// Exact implementors use structural equality; for floating-point
/// implementors `==` is the usual IEEE comparison.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable")
    }
}

/// A field: a [`Ring`] with multiplicative inverses of non-zero elements.
pub trait Field: Ring {
    /// `None` for zero.
    fn try_inv(&self) -> Option<Self>;

    fn try_div(&self, other: &Self) -> Option<Self> {
        other.try_inv().map(|inv| self.clone() * inv)
    }
}

/// A field automorphism of order at most two, e.g. `√5 ↦ -√5`.
pub trait Galois {
    fn galois(&self) -> Self;
}

/// Lossy conversion used for display and numeric cross-checks only.
pub trait ToFloat {
    fn to_float(&self) -> f64;
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Ring for $t {}

        impl Field for $t {
            fn try_inv(&self) -> Option<Self> {
                if *self == 0.0 { None } else { Some(1.0 / *self) }
            }
        }

        impl Galois for $t {
            fn galois(&self) -> Self { *self }
        }

        impl ToFloat for $t {
            fn to_float(&self) -> f64 { *self as f64 }
        }
    )*};
}

float_scalar!(f32, f64);

impl Ring for BigRational {}

impl Field for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Galois for BigRational {
    fn galois(&self) -> Self {
        self.clone()
    }
}

impl ToFloat for BigRational {
    fn to_float(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Ring for Ratio<i64> {}

impl Field for Ratio<i64> {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Galois for Ratio<i64> {
    fn galois(&self) -> Self {
        *self
    }
}

impl ToFloat for Ratio<i64> {
    fn to_float(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}
