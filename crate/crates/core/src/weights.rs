//! The weight lattice of `G2` in simple-root coordinates.
//!
//! `α1` is the short simple root and `α2` the long one. The fundamental
//! weights are `γ1 = 2α1 + α2` and `γ2 = 3α1 + 2α2`; the change of basis is
//! unimodular, so every integral weight has integer coordinates in both.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// `a*α1 + b*α2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };
    pub const ALPHA1: Weight = Weight { a: 1, b: 0 };
    pub const ALPHA2: Weight = Weight { a: 0, b: 1 };
    pub const GAMMA1: Weight = Weight { a: 2, b: 1 };
    pub const GAMMA2: Weight = Weight { a: 3, b: 2 };
    /// Half the sum of the positive roots, `γ1 + γ2`.
    pub const RHO: Weight = Weight { a: 5, b: 3 };

    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    /// Build `x*γ1 + y*γ2`.
    pub const fn from_fundamental(x: i64, y: i64) -> Self {
        Weight { a: 2 * x + 3 * y, b: x + 2 * y }
    }

    /// Coordinates `(x, y)` with `self = x*γ1 + y*γ2`.
    pub const fn to_fundamental(self) -> (i64, i64) {
        (2 * self.a - 3 * self.b, 2 * self.b - self.a)
    }

    /// Invariant form with `<α1, α1> = 2`, `<α2, α2> = 6`, `<α1, α2> = -3`.
    pub const fn pairing(self, other: Weight) -> i64 {
        2 * self.a * other.a - 3 * (self.a * other.b + self.b * other.a) + 6 * self.b * other.b
    }

    pub fn is_positive_root(self) -> bool {
        POSITIVE_ROOTS.contains(&self)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// The positive roots, ordered by height and then by the `α2` coefficient:
/// `α1, α2, α1+α2, 2α1+α2, 3α1+α2, 3α1+2α2`.
pub const POSITIVE_ROOTS: [Weight; 6] = [
    Weight::new(1, 0),
    Weight::new(0, 1),
    Weight::new(1, 1),
    Weight::new(2, 1),
    Weight::new(3, 1),
    Weight::new(3, 2),
];

pub fn positive_roots() -> [Weight; 6] {
    POSITIVE_ROOTS
}

/// Dominant highest weight `m1*γ1 + m2*γ2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HighestWeight {
    pub m1: u32,
    pub m2: u32,
}

impl HighestWeight {
    pub const fn new(m1: u32, m2: u32) -> Self {
        HighestWeight { m1, m2 }
    }

    /// Accepts signed input, rejecting anything non-dominant.
    pub fn try_new(m1: i64, m2: i64) -> Option<Self> {
        Some(HighestWeight::new(u32::try_from(m1).ok()?, u32::try_from(m2).ok()?))
    }

    pub fn m1(self) -> i64 {
        i64::from(self.m1)
    }

    pub fn m2(self) -> i64 {
        i64::from(self.m2)
    }

    pub fn weight(self) -> Weight {
        Weight::from_fundamental(self.m1(), self.m2())
    }

    /// All `(m1, m2)` with `m1 <= m1_max`, `m2 <= m2_max`, lexicographic.
    pub fn grid(m1_max: u32, m2_max: u32) -> impl Iterator<Item = HighestWeight> {
        (0..=m1_max).flat_map(move |m1| (0..=m2_max).map(move |m2| HighestWeight::new(m1, m2)))
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m1, self.m2)
    }
}

/// Weyl dimension formula, `∏ <λ+ρ, α> / <ρ, α>` over the positive roots.
///
/// The product is formed in `T`; with an exact scalar the result is the
/// integer dimension.
pub fn weyl_dimension<T: Scalar>(lambda: HighestWeight) -> T {
    let shifted = lambda.weight() + Weight::RHO;
    POSITIVE_ROOTS.iter().fold(T::one(), |acc, &alpha| {
        acc * T::from_int(shifted.pairing(alpha)) / T::from_int(Weight::RHO.pairing(alpha))
    })
}

/// Dimension of the irreducible representation with highest weight `lambda`.
pub fn weyl_dim_g2(lambda: HighestWeight) -> u64 {
    let dim: crate::BigRational = weyl_dimension(lambda);
    assert!(dim.is_integer(), "Weyl dimension must be integral");
    u64::try_from(dim.to_integer()).expect("dimension fits in u64")
}
