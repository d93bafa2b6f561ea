//! Scalar fields for the exact linear algebra.
//!
//! The oracle needs certainty about kernel dimensions, so the bound is an
//! exact field: `Num` with equality and no rounding. Both [`crate::Rational`]
//! and [`crate::BigRational`] qualify.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub trait ExactField:
    Num + Neg<Output = Self> + Clone + PartialEq + FromPrimitive + Debug + Send + Sync
{
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("integer embeds into the field")
    }
}

impl<T> ExactField for T where
    T: Num + Neg<Output = T> + Clone + PartialEq + FromPrimitive + Debug + Send + Sync
{
}
