//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real floating-point scalar (`f32` or `f64`).
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`, rounding if necessary.
    #[inline]
    fn lit(value: f64) -> Self {
        // Never fails for the two IEEE types this trait is implemented for.
        Self::from_f64(value).expect("f64 literal representable")
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
