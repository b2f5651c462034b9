//! Eisenstein cohomology: the image of the full cohomology in the boundary.
//!
//! Each pair `{w, w'}` of Kostant representatives of a maximal parabolic with
//! a shared even `a >= 2` contributes one copy of `S_{a+2}`, placed in the
//! degree of the longer element. In the two residual configurations the
//! constant term has a pole, and eigenforms with nonvanishing central
//! L-value move down to degree 3. Which eigenforms those are is not
//! computable here; an [`LOracle`] supplies the counts.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::levi_cohomology::levi_coordinates;
use crate::space::{cusp_dim, CohSummand, GradedSpace, Selector};
use crate::spectral::classify_case;
use crate::weights::HighestWeight;
use crate::weyl::{self, Parabolic, WeylElement};

/// L-function attached to a weight-`k` eigenform `π`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LKind {
    /// `L(s, π)`.
    Std,
    /// `L(s, Sym^3 π)`.
    Sym3,
}

impl LKind {
    pub fn for_parabolic(p: Parabolic) -> Option<LKind> {
        match p {
            Parabolic::P0 => None,
            Parabolic::P1 => Some(LKind::Std),
            Parabolic::P2 => Some(LKind::Sym3),
        }
    }

    fn parse(s: &str) -> Option<LKind> {
        match s {
            "std" => Some(LKind::Std),
            "sym3" => Some(LKind::Sym3),
            _ => None,
        }
    }
}

impl fmt::Display for LKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LKind::Std => "std",
            LKind::Sym3 => "sym3",
        })
    }
}

/// Number of eigenforms of weight `k` with vanishing / nonvanishing central
/// L-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentralSplit {
    pub zero: u64,
    pub nonzero: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExplicitTable {
    pub source: String,
    pub entries: BTreeMap<(LKind, u32), CentralSplit>,
}

impl ExplicitTable {
    /// Parses `{"std": {"12": {"zero": 0, "nonzero": 1}}, "sym3": {...}}`.
    pub fn from_json(text: &str, source: &str) -> Result<Self> {
        let root: Value = serde_json::from_str(text).map_err(|e| Error::OracleFile(format!("{source}: {e}")))?;
        let Value::Object(kinds) = root else {
            return Err(Error::OracleFile(format!("{source}: top level must be an object")));
        };
        let mut entries = BTreeMap::new();
        for (kind_key, table) in kinds {
            let lkind = LKind::parse(&kind_key)
                .ok_or_else(|| Error::OracleFile(format!("{source}: unknown L-function kind `{kind_key}`")))?;
            let Value::Object(table) = table else {
                return Err(Error::OracleInvalid { lkind, k: "*".into(), reason: "expected an object".into() });
            };
            for (k_key, entry) in table {
                let invalid = |reason: String| Error::OracleInvalid { lkind, k: k_key.clone(), reason };
                let k: u32 = k_key.parse().map_err(|_| invalid("weight is not a non-negative integer".into()))?;
                let split: CentralSplit = serde_json::from_value(entry).map_err(|e| invalid(e.to_string()))?;
                let d = cusp_dim(i64::from(k));
                if split.zero + split.nonzero != d {
                    return Err(invalid(format!(
                        "zero + nonzero = {} but dim S_{k} = {d}",
                        split.zero + split.nonzero
                    )));
                }
                entries.insert((lkind, k), split);
            }
        }
        Ok(ExplicitTable { source: source.to_string(), entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::OracleFile(format!("{}: {e}", path.display())))?;
        Self::from_json(&text, &path.display().to_string())
    }
}

/// Source of the central-value split.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum LOracle {
    /// Keep split summands symbolic.
    #[default]
    Symbolic,
    AllNonzero,
    AllZero,
    /// Root-number heuristic: `L(1/2, π)` vanishes when `k ≡ 2 (mod 4)` and
    /// is otherwise taken to be nonzero; `L(1/2, Sym^3 π)` is taken nonzero.
    SignHeuristic,
    Explicit(ExplicitTable),
}

impl LOracle {
    /// `symbolic`, `all-nonzero`, `all-zero`, `sign` or `file:PATH`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        match spec {
            "symbolic" => Ok(LOracle::Symbolic),
            "all-nonzero" => Ok(LOracle::AllNonzero),
            "all-zero" => Ok(LOracle::AllZero),
            "sign" => Ok(LOracle::SignHeuristic),
            _ => match spec.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(LOracle::Explicit(ExplicitTable::load(Path::new(path))?)),
                _ => Err(Error::OracleSpec(spec.to_string())),
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            LOracle::Symbolic => "symbolic".into(),
            LOracle::AllNonzero => "all-nonzero".into(),
            LOracle::AllZero => "all-zero".into(),
            LOracle::SignHeuristic => "sign".into(),
            LOracle::Explicit(t) => format!("file:{}", t.source),
        }
    }

    pub fn is_concrete(&self) -> bool {
        !matches!(self, LOracle::Symbolic)
    }

    /// Split of the weight-`k` eigenforms, `None` when left symbolic.
    /// Weights with `S_k = 0` always split as `0 + 0`.
    pub fn split(&self, lkind: LKind, k: u32) -> Result<Option<CentralSplit>> {
        let d = cusp_dim(i64::from(k));
        let all_zero = CentralSplit { zero: d, nonzero: 0 };
        let all_nonzero = CentralSplit { zero: 0, nonzero: d };
        Ok(match self {
            _ if d == 0 => Some(all_zero),
            LOracle::Symbolic => None,
            LOracle::AllNonzero => Some(all_nonzero),
            LOracle::AllZero => Some(all_zero),
            LOracle::SignHeuristic => match lkind {
                LKind::Std if k % 4 == 2 => Some(all_zero),
                _ => Some(all_nonzero),
            },
            LOracle::Explicit(t) => Some(*t.entries.get(&(lkind, k)).ok_or(Error::OracleMissing { lkind, k })?),
        })
    }

    /// Whether the central value vanishes for every eigenform of weight `k`.
    /// An empty `S_k` counts as nonvanishing.
    pub fn central_value_vanishes(&self, lkind: LKind, k: u32) -> Result<bool> {
        match self {
            LOracle::Symbolic => Err(Error::OracleUndetermined(self.name())),
            LOracle::AllNonzero => Ok(false),
            LOracle::AllZero => Ok(true),
            LOracle::SignHeuristic => Ok(lkind == LKind::Std && k % 4 == 2),
            LOracle::Explicit(_) => {
                let s = self.split(lkind, k)?.expect("explicit tables are concrete");
                match (s.zero, s.nonzero) {
                    (_, 0) if s.zero > 0 => Ok(true),
                    (0, _) => Ok(false),
                    _ => Err(Error::OracleUndetermined(format!("{} at {lkind}.{k}", self.name()))),
                }
            }
        }
    }
}

/// A pair `{w, w'}` in `W^P` with shared even `a >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InnerPair {
    pub parabolic: Parabolic,
    /// The member of length at least 3.
    pub long_rep: &'static WeylElement,
    pub short_rep: &'static WeylElement,
    pub a: i64,
    pub k: u32,
    /// The member whose face carries the Eisenstein `H^1` class.
    pub eis_member: &'static WeylElement,
}

impl InnerPair {
    pub fn lkind(&self) -> LKind {
        LKind::for_parabolic(self.parabolic).expect("pairs live on maximal parabolics")
    }

    /// Degree of the inner Eisenstein classes away from the residual case.
    pub fn degree(&self) -> usize {
        1 + self.long_rep.length as usize
    }
}

/// `W^P_>`: the members of `W^P` at least as long as their partner.
pub fn long_representatives(p: Parabolic) -> Vec<&'static WeylElement> {
    weyl::kostant_representatives(p)
        .into_iter()
        .filter(|w| {
            let partner = weyl::involution(w, p).expect("Kostant representative");
            w.length >= partner.length
        })
        .collect()
}

pub fn inner_pairs(lambda: HighestWeight) -> Vec<InnerPair> {
    let mut out = Vec::new();
    for p in Parabolic::MAXIMAL {
        for long_rep in long_representatives(p) {
            let short_rep = weyl::involution(long_rep, p).expect("Kostant representative");
            let lw = levi_coordinates(long_rep, lambda, p).expect("Kostant representative");
            let lw_short = levi_coordinates(short_rep, lambda, p).expect("Kostant representative");
            debug_assert_eq!(lw.a, lw_short.a);
            if lw.a < 2 || lw.a % 2 != 0 {
                continue;
            }
            let eis_member = match (lw.e % 2 != 0, lw_short.e % 2 != 0) {
                (true, false) => long_rep,
                (false, true) => short_rep,
                _ => unreachable!("exactly one member of a pair has odd e"),
            };
            let k = u32::try_from(lw.a + 2).expect("a is non-negative");
            out.push(InnerPair { parabolic: p, long_rep, short_rep, a: lw.a, k, eis_member });
        }
    }
    out
}

/// The configurations `(P1, w7, m2 = 0)` and `(P2, w6, m1 = 0)`.
pub fn exceptional_residual(pair: &InnerPair, lambda: HighestWeight) -> bool {
    match pair.parabolic {
        Parabolic::P1 => pair.long_rep.label == 7 && lambda.m2 == 0,
        Parabolic::P2 => pair.long_rep.label == 6 && lambda.m1 == 0,
        Parabolic::P0 => false,
    }
}

/// Degree of the unit class coming from the minimal parabolic.
pub fn minimal_boundary_class(lambda: HighestWeight) -> Option<(usize, CohSummand)> {
    let q = match classify_case(lambda) {
        1 => 0,
        3 | 7 => 5,
        5 => 6,
        _ => return None,
    };
    Some((q, CohSummand::Unit))
}

pub fn eisenstein_cohomology(lambda: HighestWeight, oracle: &LOracle) -> Result<GradedSpace> {
    let mut out = GradedSpace::new();
    for pair in inner_pairs(lambda) {
        if exceptional_residual(&pair, lambda) {
            let lkind = pair.lkind();
            oracle.split(lkind, pair.k)?;
            out.push(3, CohSummand::split(pair.k, Selector::CentralNonzero, lkind));
            out.push(4, CohSummand::split(pair.k, Selector::CentralZero, lkind));
        } else {
            out.push(pair.degree(), CohSummand::cusp(pair.k));
        }
    }
    if let Some((q, s)) = minimal_boundary_class(lambda) {
        out.push(q, s);
    }
    Ok(out)
}
