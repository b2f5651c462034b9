//! Constant terms of Eisenstein series as formal products of zeta and
//! L-function quotients, and their pole order at the evaluation point.
//!
//! A token `F(ℓ)` stands for `F(ℓ) / F(ℓ + 1)`, where `ℓ` is an affine form in
//! one variable `z` (maximal parabolics) or two variables `z1, z2` (Borel).

use std::fmt;

use crate::eisenstein::{LKind, LOracle};
use crate::error::{Error, Result};
use crate::levi_cohomology::levi_coordinates;
use crate::scalar::Scalar;
use crate::weights::{HighestWeight, Weight, POSITIVE_ROOTS};
use crate::weyl::{Parabolic, WeylElement};

#[derive(Debug, Clone, PartialEq)]
pub struct AffineForm<T> {
    pub coeffs: Vec<T>,
    pub constant: T,
}

impl<T: Scalar> AffineForm<T> {
    pub fn new(coeffs: Vec<T>, constant: T) -> Self {
        AffineForm { coeffs, constant }
    }

    /// `c * z`.
    pub fn scaled_var(c: i64) -> Self {
        AffineForm::new(vec![T::from_int(c)], T::zero())
    }

    pub fn shifted(&self, by: T) -> Self {
        AffineForm::new(self.coeffs.clone(), self.constant.clone() + by)
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.coeffs.len(), "point does not match the number of variables");
        self.coeffs.iter().zip(point).fold(self.constant.clone(), |acc, (c, x)| acc + c.clone() * x.clone())
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for AffineForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[&str] = if self.coeffs.len() == 1 { &["z"] } else { &["z1", "z2"] };
        let mut terms = Vec::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                terms.push(name.to_string());
            } else {
                terms.push(format!("{c}{name}"));
            }
        }
        if !self.constant.is_zero() || terms.is_empty() {
            terms.push(self.constant.to_string());
        }
        f.write_str(&terms.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Zeta,
    StdL,
    Sym3L,
}

impl FactorKind {
    pub fn lkind(self) -> Option<LKind> {
        match self {
            FactorKind::Zeta => None,
            FactorKind::StdL => Some(LKind::Std),
            FactorKind::Sym3L => Some(LKind::Sym3),
        }
    }
}

/// `F(numerator) / F(numerator + 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LFactorToken<T> {
    pub kind: FactorKind,
    pub numerator: AffineForm<T>,
}

impl<T: Scalar> LFactorToken<T> {
    pub fn new(kind: FactorKind, numerator: AffineForm<T>) -> Self {
        LFactorToken { kind, numerator }
    }

    pub fn denominator(&self) -> AffineForm<T> {
        self.numerator.shifted(T::one())
    }
}

/// `L(z, π) ζ(2z) L(3z, π)`, each over its shift by one.
pub fn c1_factors<T: Scalar>() -> Vec<LFactorToken<T>> {
    vec![
        LFactorToken::new(FactorKind::StdL, AffineForm::scaled_var(1)),
        LFactorToken::new(FactorKind::Zeta, AffineForm::scaled_var(2)),
        LFactorToken::new(FactorKind::StdL, AffineForm::scaled_var(3)),
    ]
}

/// `L(z, Sym^3 π) ζ(2z)`, each over its shift by one.
pub fn c2_factors<T: Scalar>() -> Vec<LFactorToken<T>> {
    vec![
        LFactorToken::new(FactorKind::Sym3L, AffineForm::scaled_var(1)),
        LFactorToken::new(FactorKind::Zeta, AffineForm::scaled_var(2)),
    ]
}

/// Coefficients `(⟨α, γ1⟩, ⟨α, γ2⟩)` entering the Borel constant term, in
/// the order of [`POSITIVE_ROOTS`].
pub const COROOT_PAIRINGS: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 3), (2, 3), (1, 1), (1, 2)];

pub fn coroot_pairing(alpha: Weight) -> Option<(i64, i64)> {
    POSITIVE_ROOTS.iter().position(|r| *r == alpha).map(|i| COROOT_PAIRINGS[i])
}

/// One `ζ` token per inversion `α` of `w`, with argument
/// `⟨α, γ1⟩(z1 + 1) + ⟨α, γ2⟩(z2 + 1) - 1`.
pub fn c0_factors<T: Scalar>(w: &WeylElement) -> Vec<LFactorToken<T>> {
    w.inversion_set()
        .into_iter()
        .map(|alpha| {
            let (c1, c2) = coroot_pairing(alpha).expect("inversions are positive roots");
            let form = AffineForm::new(vec![T::from_int(c1), T::from_int(c2)], T::from_int(c1 + c2 - 1));
            LFactorToken::new(FactorKind::Zeta, form)
        })
        .collect()
}

/// Where a constant term is evaluated for the class indexed by `(P, w, λ)`.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecialPoint<T> {
    Maximal { parabolic: Parabolic, label: u8, z: T },
    Minimal { label: u8, z1: T, z2: T },
}

impl<T: Scalar> SpecialPoint<T> {
    pub fn values(&self) -> Vec<T> {
        match self {
            SpecialPoint::Maximal { z, .. } => vec![z.clone()],
            SpecialPoint::Minimal { z1, z2, .. } => vec![z1.clone(), z2.clone()],
        }
    }
}

/// `z = -(b + ρ_b)/2` on a maximal parabolic, `(-m1 - 1, -m2 - 1)` on the
/// Borel.
pub fn special_point<T: Scalar>(p: Parabolic, w: &WeylElement, lambda: HighestWeight) -> Result<SpecialPoint<T>> {
    match p {
        Parabolic::P0 => Ok(SpecialPoint::Minimal {
            label: w.label,
            z1: T::from_int(-lambda.m1() - 1),
            z2: T::from_int(-lambda.m2() - 1),
        }),
        _ => {
            let lw = levi_coordinates(w, lambda, p)?;
            let rho_b = p.rho_b().expect("maximal parabolic");
            Ok(SpecialPoint::Maximal { parabolic: p, label: w.label, z: T::ratio(-(lw.b + rho_b), 2) })
        }
    }
}

/// Net order of a product of tokens at a point, with flags that do not
/// enter the order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PoleAnalysis {
    /// Positive for a pole, negative for a zero.
    pub order: i32,
    /// Some zeta factor sits at a trivial zero.
    pub trivial_zero: bool,
    pub diagnostics: Vec<String>,
}

fn is_negative_even<T: Scalar>(x: &T) -> bool {
    matches!(x.as_integer(), Some(n) if n < 0 && n % 2 == 0)
}

/// `k` is the weight of the eigenform behind any L-factor in `tokens`.
pub fn pole_analysis<T: Scalar + fmt::Display>(
    tokens: &[LFactorToken<T>],
    point: &SpecialPoint<T>,
    oracle: &LOracle,
    k: u32,
) -> Result<PoleAnalysis> {
    let values = point.values();
    let half = T::one_half();
    let mut out = PoleAnalysis::default();
    for token in tokens {
        let num = token.numerator.eval(&values);
        let den = token.denominator().eval(&values);
        match token.kind.lkind() {
            None => {
                if num.is_one() {
                    out.order += 1;
                }
                if den.is_one() {
                    out.order -= 1;
                }
                for arg in [&num, &den] {
                    if is_negative_even(arg) {
                        out.trivial_zero = true;
                        out.diagnostics.push(format!("zeta at trivial zero {arg}"));
                    }
                }
            }
            Some(lkind) => {
                // Entire; only the central point can vanish.
                for (arg, sign) in [(&num, -1), (&den, 1)] {
                    if *arg == half && oracle.central_value_vanishes(lkind, k)? {
                        out.order += sign;
                    }
                }
            }
        }
    }
    if out.trivial_zero && out.order > 0 {
        out.diagnostics.push("trivial zeta zero coincides with a pole; not cancelled".to_string());
    }
    Ok(out)
}

pub fn pole_order<T: Scalar + fmt::Display>(
    tokens: &[LFactorToken<T>],
    point: &SpecialPoint<T>,
    oracle: &LOracle,
    k: u32,
) -> Result<i32> {
    pole_analysis(tokens, point, oracle, k).map(|a| a.order)
}

/// The constant-term factors for a parabolic.
pub fn factors_for<T: Scalar>(p: Parabolic, w: &WeylElement) -> Vec<LFactorToken<T>> {
    match p {
        Parabolic::P0 => c0_factors(w),
        Parabolic::P1 => c1_factors(),
        Parabolic::P2 => c2_factors(),
    }
}

/// Pole order of the constant term attached to `(P, w, λ)` at its special
/// point, for the cusp weight `a + 2` of that face.
pub fn pole_order_at(p: Parabolic, w: &WeylElement, lambda: HighestWeight, oracle: &LOracle) -> Result<i32> {
    if !p.is_maximal() {
        return Err(Error::NotMaximal(p));
    }
    let lw = levi_coordinates(w, lambda, p)?;
    let k = u32::try_from(lw.a + 2).expect("a is non-negative");
    let point = special_point::<crate::Rational>(p, w, lambda)?;
    pole_order(&factors_for(p, w), &point, oracle, k)
}
