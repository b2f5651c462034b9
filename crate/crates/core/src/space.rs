//! Formal cohomology summands and degree-graded multisets of them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::eisenstein::{LKind, LOracle};
use crate::error::Result;
use crate::TOP_DEGREE;

/// Dimension of the space of level-one cusp forms of weight `k`.
pub fn cusp_dim(k: i64) -> u64 {
    if k < 12 || k % 2 != 0 || k == 14 {
        return 0;
    }
    let q = (k / 12) as u64;
    if k % 12 == 2 {
        q - 1
    } else {
        q
    }
}

/// Which part of `S_k` a summand stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Selector {
    All,
    /// Eigenforms whose central L-value vanishes.
    CentralZero,
    /// Eigenforms whose central L-value does not vanish.
    CentralNonzero,
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Selector::All => "all",
            Selector::CentralZero => "central-zero",
            Selector::CentralNonzero => "central-nonzero",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CohSummand {
    /// A one-dimensional class.
    Unit,
    /// `S_k`, or the part of it cut out by a central L-value.
    Cusp { k: u32, selector: Selector, lkind: Option<LKind> },
}

impl CohSummand {
    pub const fn cusp(k: u32) -> Self {
        CohSummand::Cusp { k, selector: Selector::All, lkind: None }
    }

    pub const fn split(k: u32, selector: Selector, lkind: LKind) -> Self {
        CohSummand::Cusp { k, selector, lkind: Some(lkind) }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, CohSummand::Unit)
    }

    pub fn weight(&self) -> Option<u32> {
        match self {
            CohSummand::Unit => None,
            CohSummand::Cusp { k, .. } => Some(*k),
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, CohSummand::Cusp { selector, .. } if *selector != Selector::All)
    }

    /// Vanishes for every oracle, because the ambient `S_k` is zero.
    pub fn is_identically_zero(&self) -> bool {
        match self {
            CohSummand::Unit => false,
            CohSummand::Cusp { k, .. } => cusp_dim(i64::from(*k)) == 0,
        }
    }

    /// Dimension under `oracle`; `None` if the oracle leaves it open.
    pub fn dim(&self, oracle: &LOracle) -> Result<Option<u64>> {
        match *self {
            CohSummand::Unit => Ok(Some(1)),
            CohSummand::Cusp { k, selector: Selector::All, .. } => Ok(Some(cusp_dim(i64::from(k)))),
            CohSummand::Cusp { k, selector, lkind } => {
                let lkind = lkind.expect("split summands carry an L-function kind");
                Ok(oracle.split(lkind, k)?.map(|s| match selector {
                    Selector::CentralZero => s.zero,
                    _ => s.nonzero,
                }))
            }
        }
    }
}

impl fmt::Display for CohSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohSummand::Unit => f.write_str("Q"),
            CohSummand::Cusp { k, selector: Selector::All, .. } => write!(f, "S_{k}"),
            CohSummand::Cusp { k, selector, lkind } => {
                let l = lkind.map(|l| l.to_string()).unwrap_or_default();
                let rel = if *selector == Selector::CentralZero { "=" } else { "!=" };
                write!(f, "S_{k}[L_{l}(1/2){rel}0]")
            }
        }
    }
}

pub type Dims = [Option<u64>; TOP_DEGREE + 1];

/// Multisets of summands in degrees `0..=7`.
///
/// Equality ignores the order of summands within a degree.
#[derive(Debug, Clone, Default)]
pub struct GradedSpace {
    degrees: [Vec<CohSummand>; TOP_DEGREE + 1],
}

impl GradedSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, q: usize, s: CohSummand) {
        assert!(q <= TOP_DEGREE, "degree {q} out of range");
        self.degrees[q].push(s);
    }

    pub fn extend(&mut self, q: usize, items: impl IntoIterator<Item = CohSummand>) {
        for s in items {
            self.push(q, s);
        }
    }

    pub fn degree(&self, q: usize) -> &[CohSummand] {
        self.degrees.get(q).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `(degree, summands)` for every degree, including empty ones.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &[CohSummand])> {
        self.degrees.iter().enumerate().map(|(q, v)| (q, v.as_slice()))
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.iter().all(Vec::is_empty)
    }

    pub fn summand_count(&self) -> usize {
        self.degrees.iter().map(Vec::len).sum()
    }

    pub fn has_split(&self) -> bool {
        self.degrees.iter().flatten().any(CohSummand::is_split)
    }

    /// Copy with every degree sorted.
    pub fn sorted(&self) -> Self {
        let mut out = self.clone();
        for v in &mut out.degrees {
            v.sort();
        }
        out
    }

    /// Copy without the summands that are zero whatever the oracle.
    pub fn pruned(&self) -> Self {
        let mut out = self.clone();
        for v in &mut out.degrees {
            v.retain(|s| !s.is_identically_zero());
        }
        out
    }

    pub fn dims(&self, oracle: &LOracle) -> Result<Dims> {
        let mut out = [None; TOP_DEGREE + 1];
        for (q, v) in self.degrees.iter().enumerate() {
            let mut total = Some(0u64);
            for s in v {
                total = match (total, s.dim(oracle)?) {
                    (Some(t), Some(d)) => Some(t + d),
                    _ => None,
                };
            }
            out[q] = total;
        }
        Ok(out)
    }

    /// Dimensions of a space without oracle-split summands.
    pub fn plain_dims(&self) -> [u64; TOP_DEGREE + 1] {
        let dims = self.dims(&LOracle::Symbolic).expect("symbolic oracle never fails");
        dims.map(|d| d.expect("space has no split summands"))
    }
}

impl PartialEq for GradedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.sorted().degrees == other.sorted().degrees
    }
}

impl Eq for GradedSpace {}

impl fmt::Display for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, v) in self.iter() {
            if v.is_empty() {
                continue;
            }
            if !first {
                f.write_str("; ")?;
            }
            first = false;
            let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
            write!(f, "H^{q}: {}", parts.join(" + "))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp_dims() {
        assert_eq!(cusp_dim(12), 1);
        assert_eq!(cusp_dim(14), 0);
        assert_eq!(cusp_dim(24), 2);
        assert_eq!(cusp_dim(26), 1);
        assert_eq!(cusp_dim(13), 0);
        assert_eq!(cusp_dim(-4), 0);
        assert_eq!(cusp_dim(38), 2);
    }

    #[test]
    fn multiset_equality() {
        let mut x = GradedSpace::new();
        x.push(3, CohSummand::cusp(12));
        x.push(3, CohSummand::Unit);
        let mut y = GradedSpace::new();
        y.push(3, CohSummand::Unit);
        y.push(3, CohSummand::cusp(12));
        assert_eq!(x, y);
        y.push(4, CohSummand::Unit);
        assert_ne!(x, y);
    }

    #[test]
    fn pruning_drops_zero_spaces() {
        let mut x = GradedSpace::new();
        x.push(3, CohSummand::cusp(6));
        x.push(3, CohSummand::split(8, Selector::CentralZero, LKind::Sym3));
        x.push(4, CohSummand::cusp(16));
        let p = x.pruned();
        assert!(p.degree(3).is_empty());
        assert_eq!(p.degree(4), &[CohSummand::cusp(16)]);
    }

    #[test]
    fn dims_with_oracles() {
        let mut x = GradedSpace::new();
        x.push(3, CohSummand::split(12, Selector::CentralNonzero, LKind::Std));
        x.push(4, CohSummand::split(12, Selector::CentralZero, LKind::Std));
        x.push(4, CohSummand::Unit);
        let sym = x.dims(&LOracle::Symbolic).unwrap();
        assert_eq!(sym[3], None);
        assert_eq!(sym[0], Some(0));
        let nz = x.dims(&LOracle::AllNonzero).unwrap();
        assert_eq!((nz[3], nz[4]), (Some(1), Some(1)));
        let z = x.dims(&LOracle::AllZero).unwrap();
        assert_eq!((z[3], z[4]), (Some(0), Some(2)));
    }

    #[test]
    fn display() {
        let mut x = GradedSpace::new();
        assert_eq!(x.to_string(), "0");
        x.push(0, CohSummand::Unit);
        x.push(3, CohSummand::split(8, Selector::CentralNonzero, LKind::Sym3));
        assert_eq!(x.to_string(), "H^0: Q; H^3: S_8[L_sym3(1/2)!=0]");
    }
}
