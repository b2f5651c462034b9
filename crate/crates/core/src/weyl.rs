//! The Weyl group of `G2` (dihedral of order 12), acting on simple-root
//! coordinates, together with the standard parabolics and their Kostant
//! representatives.
//!
//! Elements are identified by their integer matrix; words are only a label.
//! Labels `w1..w12` follow the fixed table of reduced words in
//! [`TABLE_WORDS`].

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{HighestWeight, Weight, POSITIVE_ROOTS};

/// Integer 2x2 matrix acting on column vectors `(a, b)`.
pub type Matrix = [[i64; 2]; 2];

pub const IDENTITY: Matrix = [[1, 0], [0, 1]];
/// `s1: (a, b) -> (3b - a, b)`.
pub const S1: Matrix = [[-1, 3], [0, 1]];
/// `s2: (a, b) -> (a, a - b)`.
pub const S2: Matrix = [[1, 0], [1, -1]];

fn mat_mul(x: &Matrix, y: &Matrix) -> Matrix {
    let mut out = [[0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn mat_apply(m: &Matrix, w: Weight) -> Weight {
    Weight::new(m[0][0] * w.a + m[0][1] * w.b, m[1][0] * w.a + m[1][1] * w.b)
}

fn det(m: &Matrix) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Inverse of a unimodular matrix.
fn mat_inverse(m: &Matrix) -> Matrix {
    let d = det(m);
    debug_assert!(d == 1 || d == -1);
    [[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]]
}

/// Simple reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gen {
    S1,
    S2,
}

impl Gen {
    pub fn matrix(self) -> &'static Matrix {
        match self {
            Gen::S1 => &S1,
            Gen::S2 => &S2,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gen::S1 => "s1",
            Gen::S2 => "s2",
        })
    }
}

/// Reduced words for `w1..w12`, in table order.
pub const TABLE_WORDS: [&[Gen]; 12] = {
    use Gen::{S1, S2};
    [
        &[],
        &[S1],
        &[S2],
        &[S1, S2],
        &[S2, S1],
        &[S1, S2, S1],
        &[S2, S1, S2],
        &[S1, S2, S1, S2],
        &[S2, S1, S2, S1],
        &[S1, S2, S1, S2, S1],
        &[S2, S1, S2, S1, S2],
        &[S1, S2, S1, S2, S1, S2],
    ]
};

fn word_matrix(word: &[Gen]) -> Matrix {
    word.iter().fold(IDENTITY, |acc, g| mat_mul(&acc, g.matrix()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub label: u8,
    pub word: Vec<Gen>,
    pub matrix: Matrix,
    pub length: u32,
}

impl WeylElement {
    pub fn apply(&self, w: Weight) -> Weight {
        mat_apply(&self.matrix, w)
    }

    pub fn inverse(&self) -> &'static WeylElement {
        by_matrix(&mat_inverse(&self.matrix)).expect("group is closed under inversion")
    }

    /// `self * other`.
    pub fn compose(&self, other: &WeylElement) -> &'static WeylElement {
        by_matrix(&mat_mul(&self.matrix, &other.matrix)).expect("group is closed")
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IDENTITY
    }

    pub fn det(&self) -> i64 {
        det(&self.matrix)
    }

    /// Positive roots sent to negative roots by `self^{-1}`, i.e.
    /// `w(Φ⁻) ∩ Φ⁺`, in the order of [`POSITIVE_ROOTS`].
    pub fn inversion_set(&self) -> Vec<Weight> {
        let inv = mat_inverse(&self.matrix);
        POSITIVE_ROOTS
            .iter()
            .copied()
            .filter(|&alpha| (-mat_apply(&inv, alpha)).is_positive_root())
            .collect()
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "1".to_string()
        } else {
            self.word.iter().map(Gen::to_string).collect::<Vec<_>>().join("")
        }
    }

    pub fn name(&self) -> String {
        format!("w{}", self.label)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}", self.label)
    }
}

struct Group {
    elements: Vec<WeylElement>,
    index: HashMap<Matrix, usize>,
}

fn group() -> &'static Group {
    static GROUP: OnceLock<Group> = OnceLock::new();
    GROUP.get_or_init(|| {
        // Closure of the generators; BFS by word length gives reduced words.
        let mut seen: HashMap<Matrix, Vec<Gen>> = HashMap::new();
        seen.insert(IDENTITY, Vec::new());
        let mut queue = VecDeque::from([IDENTITY]);
        while let Some(m) = queue.pop_front() {
            for g in [Gen::S1, Gen::S2] {
                let next = mat_mul(g.matrix(), &m);
                if !seen.contains_key(&next) {
                    let mut word = vec![g];
                    word.extend_from_slice(&seen[&m]);
                    seen.insert(next, word);
                    queue.push_back(next);
                }
            }
        }
        assert_eq!(seen.len(), 12, "the Weyl group of G2 has order 12");

        let elements: Vec<WeylElement> = TABLE_WORDS
            .iter()
            .enumerate()
            .map(|(i, word)| {
                let matrix = word_matrix(word);
                let bfs_word = seen.get(&matrix).expect("table word lies in the closure");
                assert_eq!(bfs_word.len(), word.len(), "table words are reduced");
                WeylElement { label: i as u8 + 1, word: word.to_vec(), matrix, length: word.len() as u32 }
            })
            .collect();
        let index: HashMap<Matrix, usize> = elements.iter().enumerate().map(|(i, e)| (e.matrix, i)).collect();
        assert_eq!(index.len(), 12, "table words name distinct elements");
        Group { elements, index }
    })
}

/// The twelve elements, in label order.
pub fn generate_weyl_group() -> &'static [WeylElement] {
    &group().elements
}

/// Element `w{label}`, `1 <= label <= 12`.
pub fn element(label: u8) -> &'static WeylElement {
    assert!((1..=12).contains(&label), "Weyl label out of range: {label}");
    &group().elements[usize::from(label) - 1]
}

pub fn by_matrix(m: &Matrix) -> Option<&'static WeylElement> {
    let g = group();
    g.index.get(m).map(|&i| &g.elements[i])
}

pub fn identity() -> &'static WeylElement {
    element(1)
}

pub fn longest() -> &'static WeylElement {
    element(12)
}

/// `w·λ = w(λ + ρ) - ρ`.
pub fn dot_action(w: &WeylElement, lambda: HighestWeight) -> Weight {
    w.apply(lambda.weight() + Weight::RHO) - Weight::RHO
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeviKind {
    Torus,
    GL2,
}

/// Standard parabolics: the Borel `P0`, and the maximal `P1`, `P2` whose
/// Levi quotients contain the root `α1`, respectively `α2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parabolic {
    P0,
    P1,
    P2,
}

impl Parabolic {
    pub const ALL: [Parabolic; 3] = [Parabolic::P0, Parabolic::P1, Parabolic::P2];
    pub const MAXIMAL: [Parabolic; 2] = [Parabolic::P1, Parabolic::P2];

    pub fn dim_nilradical(self) -> u32 {
        match self {
            Parabolic::P0 => 6,
            Parabolic::P1 | Parabolic::P2 => 5,
        }
    }

    pub fn levi_kind(self) -> LeviKind {
        match self {
            Parabolic::P0 => LeviKind::Torus,
            _ => LeviKind::GL2,
        }
    }

    /// Coefficient of `κ` in `ρ = γ^M + ρ_b κ` on the Levi; odd for both
    /// maximal parabolics.
    pub fn rho_b(self) -> Option<i64> {
        match self {
            Parabolic::P0 => None,
            Parabolic::P1 => Some(3),
            Parabolic::P2 => Some(5),
        }
    }

    /// The simple root in the Levi.
    pub fn levi_root(self) -> Option<Weight> {
        match self {
            Parabolic::P0 => None,
            Parabolic::P1 => Some(Weight::ALPHA1),
            Parabolic::P2 => Some(Weight::ALPHA2),
        }
    }

    /// The nontrivial element of the Levi Weyl group.
    pub fn levi_reflection(self) -> Option<&'static WeylElement> {
        match self {
            Parabolic::P0 => None,
            Parabolic::P1 => Some(element(2)),
            Parabolic::P2 => Some(element(3)),
        }
    }

    /// Longest element of the Levi Weyl group.
    pub fn levi_longest(self) -> &'static WeylElement {
        self.levi_reflection().unwrap_or_else(identity)
    }

    /// Roots of the unipotent radical.
    pub fn unipotent_roots(self) -> Vec<Weight> {
        let levi = self.levi_root();
        POSITIVE_ROOTS.iter().copied().filter(|r| Some(*r) != levi).collect()
    }

    pub fn is_maximal(self) -> bool {
        self != Parabolic::P0
    }

    pub fn index(self) -> u8 {
        match self {
            Parabolic::P0 => 0,
            Parabolic::P1 => 1,
            Parabolic::P2 => 2,
        }
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.index())
    }
}

/// `w(Φ⁻) ∩ Φ⁺ ⊂ Δ(u_P)`.
pub fn is_kostant(w: &WeylElement, p: Parabolic) -> bool {
    let unipotent = p.unipotent_roots();
    w.inversion_set().iter().all(|r| unipotent.contains(r))
}

/// `w` has minimal length in its coset `W_M w`.
pub fn is_minimal_in_coset(w: &WeylElement, p: Parabolic) -> bool {
    match p.levi_reflection() {
        None => true,
        Some(s) => s.compose(w).length > w.length,
    }
}

/// Kostant representatives `W^P`, ordered by label (hence by length for the
/// maximal parabolics).
pub fn kostant_representatives(p: Parabolic) -> Vec<&'static WeylElement> {
    generate_weyl_group().iter().filter(|w| is_kostant(w, p)).collect()
}

/// Factor `w = u·v` with `u` in the Levi Weyl group and `v ∈ W^P`, lengths
/// adding up. For `P0` the Levi Weyl group is trivial and `u = 1`.
pub fn decompose_levi(w: &WeylElement, p: Parabolic) -> (&'static WeylElement, &'static WeylElement) {
    let candidates = std::iter::once(identity()).chain(p.levi_reflection());
    for u in candidates {
        let v = u.inverse().compose(w);
        if is_kostant(v, p) {
            debug_assert_eq!(u.length + v.length, w.length);
            return (u, v);
        }
    }
    unreachable!("every coset of the Levi Weyl group has a Kostant representative")
}

/// `w' = w_M · w · w_G`, an involution on `W^P` with `ℓ(w) + ℓ(w') = dim N_P`.
pub fn involution(w: &WeylElement, p: Parabolic) -> Result<&'static WeylElement> {
    if !is_kostant(w, p) {
        return Err(Error::NotKostant { label: w.label, parabolic: p });
    }
    Ok(p.levi_longest().compose(w).compose(longest()))
}
