//! Coefficient rings.
//!
//! Everything above the polynomial layer is generic over a commutative ring
//! `C`. The symbolic default is [`crate::IntPoly`]; numeric instances use
//! `BigRational`, `i64` or `f64` directly.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A commutative ring with identity.
///
/// Blanket-implemented for every type with the required operations, so
/// `BigInt`, `BigRational`, primitive integers, floats and [`crate::Poly`]
/// all qualify.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// `(-1)^n` in `C`.
pub fn sign<C: Ring>(n: usize) -> C {
    if n.is_multiple_of(2) {
        C::one()
    } else {
        -C::one()
    }
}
