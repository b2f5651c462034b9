//! Per-weight output records and their JSON, Markdown and LaTeX renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::eisenstein::{eisenstein_cohomology, LKind, LOracle};
use crate::error::Result;
use crate::reference::eiscoh_note;
use crate::space::{CohSummand, Dims, GradedSpace, Selector};
use crate::spectral::{boundary_cohomology, classify_case};
use crate::weights::HighestWeight;
use crate::TOP_DEGREE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum What {
    Boundary,
    Eisenstein,
    #[default]
    Both,
}

impl What {
    fn boundary(self) -> bool {
        self != What::Eisenstein
    }

    fn eisenstein(self) -> bool {
        self != What::Boundary
    }
}

#[derive(Serialize)]
struct SummandJson {
    #[serde(rename = "type")]
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    selector: Option<Selector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lkind: Option<LKind>,
}

impl From<&CohSummand> for SummandJson {
    fn from(s: &CohSummand) -> Self {
        match *s {
            CohSummand::Unit => SummandJson { kind: "unit", k: None, selector: None, lkind: None },
            CohSummand::Cusp { k, selector, lkind } => SummandJson {
                kind: "cusp",
                k: Some(k),
                selector: (selector != Selector::All).then_some(selector),
                lkind,
            },
        }
    }
}

fn serialize_space<S: Serializer>(space: &Option<GradedSpace>, ser: S) -> std::result::Result<S::Ok, S::Error> {
    let space = space.as_ref().expect("skipped when absent");
    let mut map = ser.serialize_map(Some(TOP_DEGREE + 1))?;
    for (q, summands) in space.iter() {
        let items: Vec<SummandJson> = summands.iter().map(SummandJson::from).collect();
        map.serialize_entry(&q.to_string(), &items)?;
    }
    map.end()
}

fn degree_map<T: Clone>(values: &[T]) -> BTreeMap<String, T> {
    values.iter().enumerate().map(|(q, v)| (q.to_string(), v.clone())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaJson {
    pub m1: u32,
    pub m2: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimsRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<BTreeMap<String, u64>>,
    /// `null` where the oracle leaves a degree unresolved.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eisenstein: Option<BTreeMap<String, Option<u64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub lambda: LambdaJson,
    pub case: u8,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_space")]
    pub boundary: Option<GradedSpace>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_space")]
    pub eisenstein: Option<GradedSpace>,
    pub dims: DimsRecord,
    pub notes: Vec<String>,
}

impl OutputRecord {
    pub fn build(lambda: HighestWeight, what: What, oracle: &LOracle) -> Result<Self> {
        let mut notes = Vec::new();
        let boundary = what.boundary().then(|| boundary_cohomology(lambda));
        let eisenstein = if what.eisenstein() { Some(eisenstein_cohomology(lambda, oracle)?) } else { None };
        let boundary_dims = boundary.as_ref().map(|b| degree_map(&b.plain_dims()));
        let eisenstein_dims = match &eisenstein {
            Some(e) => {
                notes.push(format!("L-oracle: {}", oracle.name()));
                if e.has_split() {
                    notes.push("central-value split summands are defined over C".to_string());
                }
                if let Some(note) = eiscoh_note(lambda) {
                    notes.push(note.to_string());
                }
                let dims: Dims = e.dims(oracle)?;
                Some(degree_map(&dims))
            }
            None => None,
        };
        Ok(OutputRecord {
            lambda: LambdaJson { m1: lambda.m1, m2: lambda.m2 },
            case: classify_case(lambda),
            boundary,
            eisenstein,
            dims: DimsRecord { boundary: boundary_dims, eisenstein: eisenstein_dims },
            notes,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    fn dim_text(&self, eis: bool, q: usize) -> String {
        let key = q.to_string();
        let d = if eis {
            self.dims.eisenstein.as_ref().and_then(|m| m[&key])
        } else {
            self.dims.boundary.as_ref().map(|m| m[&key])
        };
        d.map_or_else(|| "?".to_string(), |d| d.to_string())
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "## λ = ({}, {}), case {}\n", self.lambda.m1, self.lambda.m2, self.case);
        let mut header = vec!["q".to_string()];
        if self.boundary.is_some() {
            header.extend(["H^q(∂)".to_string(), "dim".to_string()]);
        }
        if self.eisenstein.is_some() {
            header.extend(["H^q_Eis".to_string(), "dim".to_string()]);
        }
        let _ = writeln!(out, "| {} |", header.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
        for q in 0..=TOP_DEGREE {
            let mut row = vec![q.to_string()];
            for (space, eis) in [(&self.boundary, false), (&self.eisenstein, true)] {
                if let Some(space) = space {
                    row.push(plain_sum(space.degree(q)));
                    row.push(self.dim_text(eis, q));
                }
            }
            let _ = writeln!(out, "| {} |", row.join(" | "));
        }
        if !self.notes.is_empty() {
            out.push('\n');
            for n in &self.notes {
                let _ = writeln!(out, "- {n}");
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        let cols = 1 + usize::from(self.boundary.is_some()) + usize::from(self.eisenstein.is_some());
        let _ = writeln!(out, "% lambda = ({}, {}), case {}", self.lambda.m1, self.lambda.m2, self.case);
        let _ = writeln!(out, "\\begin{{tabular}}{{c{}}}", "|l".repeat(cols - 1));
        let mut header = vec!["$q$".to_string()];
        if self.boundary.is_some() {
            header.push("$H^q(\\partial S_\\Gamma, \\widetilde{M}_\\lambda)$".to_string());
        }
        if self.eisenstein.is_some() {
            header.push("$H^q_{\\mathrm{Eis}}(S_\\Gamma, \\widetilde{M}_\\lambda)$".to_string());
        }
        let _ = writeln!(out, "{} \\\\ \\hline", header.join(" & "));
        for q in 0..=TOP_DEGREE {
            let mut row = vec![q.to_string()];
            for space in [&self.boundary, &self.eisenstein].into_iter().flatten() {
                row.push(format!("${}$", latex_sum(space.degree(q))));
            }
            let _ = writeln!(out, "{} \\\\", row.join(" & "));
        }
        out.push_str("\\end{tabular}\n");
        for n in &self.notes {
            let _ = writeln!(out, "% {n}");
        }
        out
    }
}

fn plain_sum(summands: &[CohSummand]) -> String {
    if summands.is_empty() {
        return "0".to_string();
    }
    summands.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ⊕ ")
}

fn latex_summand(s: &CohSummand) -> String {
    match *s {
        CohSummand::Unit => "\\mathbb{Q}".to_string(),
        CohSummand::Cusp { k, selector: Selector::All, .. } => format!("S_{{{k}}}"),
        CohSummand::Cusp { k, selector, lkind } => {
            let set = match lkind {
                Some(LKind::Sym3) => format!("\\mathcal{{Y}}_{{{k}}}"),
                _ => format!("\\mathcal{{Z}}_{{{k}}}"),
            };
            let index = match selector {
                Selector::CentralZero => format!("\\Sigma_{{{k}}} \\setminus {set}"),
                _ => set,
            };
            format!("\\bigoplus_{{\\psi \\in {index}}} \\mathbb{{C}}\\psi")
        }
    }
}

fn latex_sum(summands: &[CohSummand]) -> String {
    if summands.is_empty() {
        return "0".to_string();
    }
    summands.iter().map(latex_summand).collect::<Vec<_>>().join(" \\oplus ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::{json, Value};

    #[test]
    fn json_shape() {
        let r = OutputRecord::build(HighestWeight::new(0, 2), What::Boundary, &LOracle::Symbolic).unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["lambda"], json!({"m1": 0, "m2": 2}));
        assert_eq!(v["case"], 2);
        assert_eq!(v["boundary"]["3"], json!([{"type": "cusp", "k": 12}, {"type": "cusp", "k": 8}]));
        assert_eq!(v["dims"]["boundary"]["3"], 1);
        assert!(v.get("eisenstein").is_none());
        assert_eq!(v["notes"], json!([]));
    }

    #[test]
    fn split_summands_and_unresolved_dims() {
        let r = OutputRecord::build(HighestWeight::new(0, 4), What::Eisenstein, &LOracle::Symbolic).unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(
            v["eisenstein"]["3"],
            json!([{"type": "cusp", "k": 12, "selector": "central-nonzero", "lkind": "sym3"}])
        );
        assert_eq!(v["dims"]["eisenstein"]["3"], Value::Null);
        assert_eq!(v["dims"]["eisenstein"]["6"], 0);
        let r = OutputRecord::build(HighestWeight::new(0, 4), What::Eisenstein, &LOracle::AllZero).unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["dims"]["eisenstein"]["3"], 0);
        assert_eq!(v["dims"]["eisenstein"]["4"], 2);
    }

    #[test]
    fn renderings() {
        let r = OutputRecord::build(HighestWeight::new(3, 0), What::Both, &LOracle::Symbolic).unwrap();
        let md = r.to_markdown();
        assert!(md.contains("case 7"));
        assert!(md.contains("| 5 | S_8 ⊕ S_6 ⊕ Q | 1 |"), "{md}");
        assert!(r.notes.iter().any(|n| n.contains("2*m1+6")));
        let tex = r.to_latex();
        assert!(tex.contains("\\mathcal{Z}_{12}"));
        assert!(tex.contains("\\end{tabular}"));
    }

    #[test]
    fn empty_case() {
        let r = OutputRecord::build(HighestWeight::new(1, 1), What::Both, &LOracle::Symbolic).unwrap();
        assert_eq!(r.case, 9);
        assert!(r.boundary.as_ref().unwrap().is_empty());
        assert!(r.eisenstein.as_ref().unwrap().is_empty());
    }
}
