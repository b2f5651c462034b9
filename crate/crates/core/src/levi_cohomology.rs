//! Cohomology of the boundary faces with coefficients in the Kostant
//! summands: parity rules on the torus face and on the two `GL2` faces.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::space::CohSummand;
use crate::weights::{HighestWeight, Weight};
use crate::weyl::{self, Parabolic, WeylElement};

/// A weight of a maximal Levi, `Sym^a V ⊗ Det^e` with central coordinate `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LeviWeight {
    pub parabolic: Parabolic,
    pub a: i64,
    pub b: i64,
    pub e: i64,
}

impl LeviWeight {
    /// Coordinates of `weight` along the semisimple and central directions
    /// of the Levi of `p`.
    pub fn from_weight(p: Parabolic, weight: Weight) -> Result<Self> {
        let (x, y) = weight.to_fundamental();
        let (a, b) = match p {
            Parabolic::P0 => return Err(Error::NotMaximal(p)),
            Parabolic::P1 => (x, x + 2 * y),
            Parabolic::P2 => (y, 2 * x + 3 * y),
        };
        LeviWeight::new(p, a, b)
    }

    pub fn new(parabolic: Parabolic, a: i64, b: i64) -> Result<Self> {
        if !parabolic.is_maximal() {
            return Err(Error::NotMaximal(parabolic));
        }
        if (b - a) % 2 != 0 {
            return Err(Error::InvalidLeviWeight { a, b, reason: "a and b must have the same parity" });
        }
        Ok(LeviWeight { parabolic, a, b, e: (b - a) / 2 })
    }
}

/// `a_i(λ, w)` and `b_i(λ, w)` for `w ∈ W^{P_i}`.
pub fn levi_coordinates(w: &WeylElement, lambda: HighestWeight, p: Parabolic) -> Result<LeviWeight> {
    if !p.is_maximal() {
        return Err(Error::NotMaximal(p));
    }
    if !weyl::is_kostant(w, p) {
        return Err(Error::NotKostant { label: w.label, parabolic: p });
    }
    LeviWeight::from_weight(p, weyl::dot_action(w, lambda))
}

/// `H^0` of the torus face at `w·λ`: a unit iff both fundamental
/// coordinates are even.
pub fn torus_face_cohomology(w: &WeylElement, lambda: HighestWeight) -> Option<CohSummand> {
    let (x, y) = weyl::dot_action(w, lambda).to_fundamental();
    (x % 2 == 0 && y % 2 == 0).then_some(CohSummand::Unit)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GL2FaceCohomology {
    pub h0: Option<CohSummand>,
    pub h1_inner: Option<CohSummand>,
    pub h1_eis: Option<CohSummand>,
}

impl GL2FaceCohomology {
    pub fn is_empty(&self) -> bool {
        self.h0.is_none() && self.h1_inner.is_none() && self.h1_eis.is_none()
    }
}

pub fn gl2_face_cohomology(lw: LeviWeight) -> GL2FaceCohomology {
    let LeviWeight { a, e, .. } = lw;
    let mut out = GL2FaceCohomology::default();
    if a % 2 != 0 {
        return out;
    }
    if a == 0 {
        if e % 2 == 0 {
            out.h0 = Some(CohSummand::Unit);
        }
        return out;
    }
    let k = u32::try_from(a + 2).expect("Kostant summands have a >= 0");
    out.h1_inner = Some(CohSummand::cusp(k));
    if e % 2 != 0 {
        out.h1_eis = Some(CohSummand::Unit);
    }
    out
}

/// Labels of the Weyl elements whose face summand is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SurvivingSets {
    pub torus: Vec<u8>,
    pub p1: Vec<u8>,
    pub p2: Vec<u8>,
}

impl SurvivingSets {
    pub fn get(&self, p: Parabolic) -> &[u8] {
        match p {
            Parabolic::P0 => &self.torus,
            Parabolic::P1 => &self.p1,
            Parabolic::P2 => &self.p2,
        }
    }
}

pub fn surviving_sets(lambda: HighestWeight) -> SurvivingSets {
    let torus = weyl::generate_weyl_group()
        .iter()
        .filter(|w| torus_face_cohomology(w, lambda).is_some())
        .map(|w| w.label)
        .collect();
    let gl2 = |p: Parabolic| -> Vec<u8> {
        weyl::kostant_representatives(p)
            .into_iter()
            .filter(|w| {
                let lw = levi_coordinates(w, lambda, p).expect("Kostant representative");
                !gl2_face_cohomology(lw).is_empty()
            })
            .map(|w| w.label)
            .collect()
    };
    SurvivingSets { torus, p1: gl2(Parabolic::P1), p2: gl2(Parabolic::P2) }
}
