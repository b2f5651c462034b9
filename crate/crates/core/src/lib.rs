//! Exact boundary and Eisenstein cohomology of the locally symmetric space of
//! `G2(Z)` with coefficients in the irreducible representation of highest
//! weight `m1*γ1 + m2*γ2`.
//!
//! The pipeline is purely combinatorial:
//!
//! * [`weights`] and [`weyl`] hold the root datum, the twelve-element Weyl
//!   group, the dot action and the Kostant representatives of the three
//!   standard parabolics.
//! * [`levi_cohomology`] applies the parity rules on the torus and `GL2` faces.
//! * [`spectral`] assembles the two-column spectral sequence, computes the
//!   rank of `d1` and produces `H^q(∂S_Γ)`.
//! * [`eisenstein`] selects the Eisenstein part, with the two residual
//!   configurations governed by an [`LOracle`].
//! * [`constant_terms`] keeps the zeta/L-factor bookkeeping of the constant
//!   terms and detects poles at the evaluation points.
//! * [`reference`] holds the closed-form tables used as golden data, and
//!   [`oracles`] cross-checks the engine against them.
//!
//! Symbolic values that are genuinely rational (evaluation points, factor
//! arguments, the Weyl dimension product) are generic over [`Scalar`]; the
//! aliases below fix the usual exact choices.

pub mod constant_terms;
pub mod eisenstein;
pub mod error;
pub mod levi_cohomology;
pub mod oracles;
pub mod record;
pub mod reference;
pub mod scalar;
pub mod space;
pub mod spectral;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
pub use eisenstein::{LKind, LOracle};
pub use scalar::Scalar;
pub use space::{CohSummand, GradedSpace};
pub use weights::{HighestWeight, Weight};
pub use weyl::{Parabolic, WeylElement};

/// Exact rationals with machine-word numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary precision rationals.
pub type BigRational = num_rational::Ratio<num_bigint::BigInt>;

/// Affine argument of a zeta/L factor over [`Rational`].
pub type RationalAffine = constant_terms::AffineForm<Rational>;
/// Zeta/L factor token over [`Rational`].
pub type RationalToken = constant_terms::LFactorToken<Rational>;
/// Evaluation point over [`Rational`].
pub type RationalPoint = constant_terms::SpecialPoint<Rational>;

/// Top degree of the boundary (`vcd + 1`).
pub const TOP_DEGREE: usize = 7;
/// Virtual cohomological dimension of `G2(Z)`.
pub const VCD: usize = 6;
