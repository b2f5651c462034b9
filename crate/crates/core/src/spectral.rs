//! The two-column spectral sequence computing the cohomology of the
//! Borel-Serre boundary.
//!
//! Column 0 holds the two `GL2` faces, column 1 the torus face. Every class
//! that can meet `d1` is one-dimensional with a single possible target, so
//! the rank of `d1` is the number of targets hit.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::levi_cohomology::{gl2_face_cohomology, levi_coordinates, torus_face_cohomology};
use crate::space::{CohSummand, GradedSpace};
use crate::weights::HighestWeight;
use crate::weyl::{self, Parabolic, WeylElement};
use crate::TOP_DEGREE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Part {
    /// `H^0` of a `GL2` face.
    Invariant,
    /// Inner `H^1` of a `GL2` face.
    Inner,
    /// Eisenstein `H^1` of a `GL2` face.
    EisBoundary,
    /// `H^0` of the torus face.
    TorusUnit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceClass {
    pub parabolic: Parabolic,
    pub rep: &'static WeylElement,
    pub levi_degree: u32,
    pub part: Part,
    pub summand: CohSummand,
}

impl FaceClass {
    pub fn total_degree(&self) -> usize {
        (self.levi_degree + self.rep.length) as usize
    }

    /// Column of the spectral sequence.
    pub fn column(&self) -> usize {
        match self.parabolic {
            Parabolic::P0 => 1,
            _ => 0,
        }
    }

    pub fn is_d1_source(&self) -> bool {
        matches!(self.part, Part::Invariant | Part::EisBoundary)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct D1Edge {
    pub source: FaceClass,
    pub target: FaceClass,
}

/// `E1^{p,q}`, with `p ∈ {0, 1}` and `q ∈ 0..=6`.
#[derive(Debug, Clone, Default)]
pub struct E1Page {
    cells: BTreeMap<(usize, usize), Vec<FaceClass>>,
}

impl E1Page {
    pub fn cell(&self, p: usize, q: usize) -> &[FaceClass] {
        self.cells.get(&(p, q)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<FaceClass>)> {
        self.cells.iter()
    }

    pub fn classes(&self) -> impl Iterator<Item = &FaceClass> {
        self.cells.values().flatten()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn push(&mut self, class: FaceClass) {
        self.cells.entry((class.column(), class.total_degree())).or_default().push(class);
    }
}

/// Torus class at `w`, if it survives.
fn torus_class(w: &'static WeylElement, lambda: HighestWeight) -> Option<FaceClass> {
    torus_face_cohomology(w, lambda).map(|summand| FaceClass {
        parabolic: Parabolic::P0,
        rep: w,
        levi_degree: 0,
        part: Part::TorusUnit,
        summand,
    })
}

pub fn assemble_e1(lambda: HighestWeight) -> E1Page {
    let mut page = E1Page::default();
    for p in Parabolic::MAXIMAL {
        for v in weyl::kostant_representatives(p) {
            let lw = levi_coordinates(v, lambda, p).expect("Kostant representative");
            let face = gl2_face_cohomology(lw);
            let parts = [
                (face.h0, 0, Part::Invariant),
                (face.h1_inner, 1, Part::Inner),
                (face.h1_eis, 1, Part::EisBoundary),
            ];
            for (summand, levi_degree, part) in parts {
                if let Some(summand) = summand {
                    page.push(FaceClass { parabolic: p, rep: v, levi_degree, part, summand });
                }
            }
        }
    }
    for w in weyl::generate_weyl_group() {
        if let Some(class) = torus_class(w, lambda) {
            page.push(class);
        }
    }
    page
}

/// The torus class a column-0 source restricts to, if it survives.
fn d1_target(source: &FaceClass, lambda: HighestWeight) -> Option<FaceClass> {
    let rep = match source.part {
        Part::Invariant => source.rep,
        Part::EisBoundary => source.parabolic.levi_reflection()?.compose(source.rep),
        _ => return None,
    };
    torus_class(rep, lambda)
}

fn edges_of(page: &E1Page, lambda: HighestWeight) -> Vec<D1Edge> {
    page.classes()
        .filter(|c| c.is_d1_source())
        .filter_map(|&source| d1_target(&source, lambda).map(|target| D1Edge { source, target }))
        .collect()
}

pub fn d1_edges(lambda: HighestWeight) -> Vec<D1Edge> {
    edges_of(&assemble_e1(lambda), lambda)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct E2Page {
    /// Kernel of `d1`.
    pub e2_0: GradedSpace,
    /// Cokernel of `d1`.
    pub e2_1: GradedSpace,
}

pub fn compute_e2(lambda: HighestWeight) -> E2Page {
    let page = assemble_e1(lambda);
    let edges = edges_of(&page, lambda);
    let mut out = E2Page::default();
    for q in 0..TOP_DEGREE {
        let mut hit: Vec<u8> = Vec::new();
        for class in page.cell(0, q) {
            if !class.is_d1_source() {
                out.e2_0.push(q, class.summand);
                continue;
            }
            let edge = edges.iter().find(|e| e.source == *class);
            match edge {
                Some(e) if !hit.contains(&e.target.rep.label) => hit.push(e.target.rep.label),
                // Dead target, or an extra source on a target already hit.
                _ => out.e2_0.push(q, class.summand),
            }
        }
        for class in page.cell(1, q) {
            if !hit.contains(&class.rep.label) {
                out.e2_1.push(q, class.summand);
            }
        }
    }
    out
}

/// `H^q(∂) = E2^{0,q} ⊕ E2^{1,q-1}`.
pub fn boundary_cohomology(lambda: HighestWeight) -> GradedSpace {
    let e2 = compute_e2(lambda);
    let mut out = GradedSpace::new();
    for q in 0..=TOP_DEGREE {
        out.extend(q, e2.e2_0.degree(q).iter().copied());
        if q > 0 {
            out.extend(q, e2.e2_1.degree(q - 1).iter().copied());
        }
    }
    out
}

/// Parity class of `(m1, m2)`: zero, nonzero even, odd for each coordinate.
pub fn classify_case(lambda: HighestWeight) -> u8 {
    let class = |m: u32| -> u8 {
        if m == 0 {
            0
        } else if m.is_multiple_of(2) {
            1
        } else {
            2
        }
    };
    1 + 3 * class(lambda.m1) + class(lambda.m2)
}
