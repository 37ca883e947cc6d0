//! Coefficient scalar abstraction for the polynomial types.
//!
//! The section algebra and the chart polynomials are generic over a
//! field-like scalar. The exact instantiation (`BigRational`) carries
//! every certificate; `f64` satisfies the same bound and is used for the
//! redundant floating-point probes in the tests.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, NumAssign};

/// Field-like coefficient scalar: exact rationals or floating point.
pub trait Coeff: Num + NumAssign + std::ops::Neg<Output = Self> + Clone + PartialEq + Debug + FromPrimitive {}

impl<T> Coeff for T where
    T: Num + NumAssign + std::ops::Neg<Output = T> + Clone + PartialEq + Debug + FromPrimitive
{
}
