//! Closed-form golden tables, entered by hand in `data/` and never produced
//! by the engine.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::eisenstein::{LKind, LOracle};
use crate::error::{Error, Result};
use crate::space::{CohSummand, GradedSpace, Selector};
use crate::spectral::classify_case;
use crate::weights::HighestWeight;
use crate::weyl::Parabolic;

const WEYL_TABLE: &str = include_str!("../data/weyl_table.toml");
const BDG2_TABLE: &str = include_str!("../data/bdg2.toml");
const EISCOH_TABLE: &str = include_str!("../data/eiscoh.toml");

/// `c[0]*m1 + c[1]*m2 + c[2]`.
pub type LinearForm = [i64; 3];

pub fn eval_form(c: &LinearForm, lambda: HighestWeight) -> i64 {
    c[0] * lambda.m1() + c[1] * lambda.m2() + c[2]
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct WeylRow {
    pub label: u8,
    pub word: String,
    /// `w·λ` in simple-root coordinates.
    pub alpha: [LinearForm; 2],
    /// `w·λ` in fundamental coordinates.
    pub fundamental: [LinearForm; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct LeviRow {
    pub parabolic: Parabolic,
    pub label: u8,
    pub a: LinearForm,
    pub b: LinearForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct WeylTable {
    pub row: Vec<WeylRow>,
    pub levi: Vec<LeviRow>,
}

impl WeylTable {
    pub fn builtin() -> &'static WeylTable {
        static TABLE: OnceLock<WeylTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let t: WeylTable = toml::from_str(WEYL_TABLE).expect("bundled Weyl table parses");
            let labels: Vec<u8> = t.row.iter().map(|r| r.label).collect();
            assert_eq!(labels, (1..=12).collect::<Vec<u8>>(), "bundled Weyl table rows");
            t
        })
    }

    pub fn row(&self, label: u8) -> Option<&WeylRow> {
        self.row.iter().find(|r| r.label == label)
    }

    /// Copy with the constant of the first coordinate of row `w4` shifted,
    /// for exercising the verifier.
    pub fn with_fault(&self) -> WeylTable {
        let mut t = self.clone();
        if let Some(r) = t.row.iter_mut().find(|r| r.label == 4) {
            r.alpha[0][2] += 1;
        }
        t
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum SummandSpec {
    Unit,
    Cusp {
        k: LinearForm,
        #[serde(default)]
        selector: Option<Selector>,
        #[serde(default)]
        lkind: Option<LKind>,
    },
}

impl SummandSpec {
    fn instantiate(&self, lambda: HighestWeight) -> Result<CohSummand> {
        match self {
            SummandSpec::Unit => Ok(CohSummand::Unit),
            SummandSpec::Cusp { k, selector, lkind } => {
                let k = u32::try_from(eval_form(k, lambda))
                    .map_err(|_| Error::Table(format!("negative weight at λ = {lambda}")))?;
                Ok(match (selector, lkind) {
                    (None | Some(Selector::All), None) => CohSummand::cusp(k),
                    (Some(sel), Some(l)) if *sel != Selector::All => CohSummand::split(k, *sel, *l),
                    _ => return Err(Error::Table("split summands need both selector and lkind".into())),
                })
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
struct Block {
    degrees: Vec<usize>,
    summands: Vec<SummandSpec>,
}

#[derive(Debug, Clone, Deserialize)]
struct CaseEntry {
    id: u8,
    #[serde(default)]
    note: Option<String>,
    #[serde(default)]
    block: Vec<Block>,
}

#[derive(Debug, Clone, Deserialize)]
struct CaseTable {
    case: Vec<CaseEntry>,
}

impl CaseTable {
    fn parse(text: &str, name: &str) -> CaseTable {
        let t: CaseTable = toml::from_str(text).unwrap_or_else(|e| panic!("bundled table {name}: {e}"));
        let ids: Vec<u8> = t.case.iter().map(|c| c.id).collect();
        assert_eq!(ids, (1..=9).collect::<Vec<u8>>(), "bundled table {name} must list cases 1..9");
        t
    }

    fn entry(&self, lambda: HighestWeight) -> &CaseEntry {
        &self.case[usize::from(classify_case(lambda)) - 1]
    }

    fn instantiate(&self, lambda: HighestWeight) -> Result<GradedSpace> {
        let mut out = GradedSpace::new();
        for block in &self.entry(lambda).block {
            for &q in &block.degrees {
                if q > crate::TOP_DEGREE {
                    return Err(Error::Table(format!("degree {q} out of range")));
                }
                for s in &block.summands {
                    out.push(q, s.instantiate(lambda)?);
                }
            }
        }
        Ok(out)
    }
}

fn bdg2_table() -> &'static CaseTable {
    static T: OnceLock<CaseTable> = OnceLock::new();
    T.get_or_init(|| CaseTable::parse(BDG2_TABLE, "bdg2"))
}

fn eiscoh_table() -> &'static CaseTable {
    static T: OnceLock<CaseTable> = OnceLock::new();
    T.get_or_init(|| CaseTable::parse(EISCOH_TABLE, "eiscoh"))
}

/// Closed-form boundary cohomology.
pub fn bdg2_reference(lambda: HighestWeight) -> GradedSpace {
    bdg2_table().instantiate(lambda).expect("bundled boundary table is well formed")
}

/// Closed-form Eisenstein cohomology. Split summands are checked against
/// `oracle`, which fails if an explicit table lacks an entry.
pub fn eiscoh_reference(lambda: HighestWeight, oracle: &LOracle) -> Result<GradedSpace> {
    let out = eiscoh_table().instantiate(lambda)?;
    for (_, summands) in out.iter() {
        for s in summands {
            if let CohSummand::Cusp { k, lkind: Some(l), .. } = s {
                oracle.split(*l, *k)?;
            }
        }
    }
    Ok(out)
}

/// Remark attached to the Eisenstein table for the case of `lambda`.
pub fn eiscoh_note(lambda: HighestWeight) -> Option<&'static str> {
    eiscoh_table().entry(lambda).note.as_deref()
}
