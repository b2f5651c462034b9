//! Scalar abstraction for the rational-valued parts of the engine.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// A field-like number type that can represent every value the engine
/// produces: integers and halves of integers.
///
/// Exact types ([`crate::Rational`], [`crate::BigRational`]) are the intended
/// choice. `f64` is supported because every value that occurs is dyadic and
/// small, so it is represented exactly as well.
pub trait Scalar: Num + Signed + Clone + PartialOrd + FromPrimitive + Debug {
    /// The value as an `i64` if it is an integer, `None` otherwise.
    fn as_integer(&self) -> Option<i64>;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("i64 is representable")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn one_half() -> Self {
        Self::ratio(1, 2)
    }
}

impl Scalar for Ratio<i64> {
    fn as_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl Scalar for Ratio<BigInt> {
    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

impl Scalar for f64 {
    fn as_integer(&self) -> Option<i64> {
        (self.fract() == 0.0 && self.abs() < 9.0e15).then_some(*self as i64)
    }
}

impl Scalar for f32 {
    fn as_integer(&self) -> Option<i64> {
        (self.fract() == 0.0 && self.abs() < 1.6e7).then_some(*self as i64)
    }
}
