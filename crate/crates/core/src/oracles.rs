//! Grid verifiers cross-checking the engine against the closed-form tables
//! and against structural identities.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::constant_terms::pole_order_at;
use crate::eisenstein::{self, eisenstein_cohomology, exceptional_residual, inner_pairs, LOracle};
use crate::levi_cohomology::levi_coordinates;
use crate::reference::{bdg2_reference, eiscoh_reference, eval_form, WeylTable};
use crate::space::{CohSummand, GradedSpace};
use crate::spectral::{boundary_cohomology, classify_case};
use crate::weights::HighestWeight;
use crate::weyl::{self, Parabolic};
use crate::TOP_DEGREE;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub lambda: HighestWeight,
    pub degree: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ = {}", self.lambda)?;
        if let Some(q) = self.degree {
            write!(f, ", q = {q}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// Weights `(m1, m2) ∈ [0..grid]²` were checked.
    pub grid: u32,
    pub comparisons: u64,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    fn new(name: impl Into<String>, grid: u32) -> Self {
        Check { name: name.into(), grid, comparisons: 0, counterexample: None }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn record(&mut self, ok: bool, lambda: HighestWeight, degree: Option<usize>, detail: impl FnOnce() -> String) {
        self.comparisons += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample { lambda, degree, detail: detail() });
        }
    }

    fn absorb(&mut self, other: Check) {
        self.comparisons += other.comparisons;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status} {} [grid {}, {} comparisons]", c.name, c.grid, c.comparisons)?;
            if let Some(x) = &c.counterexample {
                write!(f, "\n     counterexample: {x}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Sweep `[0..grid]²` in parallel; per-weight results are merged in λ order.
fn sweep(grid: u32, names: &[String], per_weight: impl Fn(HighestWeight, &mut [Check]) + Sync) -> Vec<Check> {
    let weights: Vec<HighestWeight> = HighestWeight::grid(grid, grid).collect();
    let fresh = || names.iter().map(|n| Check::new(n.clone(), grid)).collect::<Vec<_>>();
    let partial: Vec<Vec<Check>> = weights
        .par_iter()
        .map(|&lambda| {
            let mut checks = fresh();
            per_weight(lambda, &mut checks);
            checks
        })
        .collect();
    let mut out = fresh();
    for checks in partial {
        for (acc, c) in out.iter_mut().zip(checks) {
            acc.absorb(c);
        }
    }
    out
}

pub fn verify_weyl_tables(grid: u32) -> VerificationReport {
    verify_weyl_tables_with(WeylTable::builtin(), grid)
}

/// Dot action, fundamental coordinates and Levi coordinates against the
/// closed forms of `table`.
pub fn verify_weyl_tables_with(table: &WeylTable, grid: u32) -> VerificationReport {
    let names = [
        "dot action vs closed forms".to_string(),
        "fundamental coordinates vs closed forms".to_string(),
        "Levi coordinates vs closed forms".to_string(),
    ];
    let checks = sweep(grid, &names, |lambda, checks| {
        for w in weyl::generate_weyl_group() {
            let Some(row) = table.row(w.label) else {
                checks[0].record(false, lambda, None, || format!("no row for {w}"));
                continue;
            };
            let got = weyl::dot_action(w, lambda);
            let want = [eval_form(&row.alpha[0], lambda), eval_form(&row.alpha[1], lambda)];
            checks[0].record([got.a, got.b] == want && row.word == w.word_string(), lambda, None, || {
                format!("{w}: engine {got}, table ({}, {}) word {}", want[0], want[1], row.word)
            });
            let (x, y) = got.to_fundamental();
            let want = [eval_form(&row.fundamental[0], lambda), eval_form(&row.fundamental[1], lambda)];
            checks[1].record([x, y] == want, lambda, None, || {
                format!("{w}: engine ({x}, {y}), table ({}, {})", want[0], want[1])
            });
        }
        for r in &table.levi {
            let w = weyl::element(r.label);
            let want = (eval_form(&r.a, lambda), eval_form(&r.b, lambda));
            let got = levi_coordinates(w, lambda, r.parabolic).map(|lw| (lw.a, lw.b));
            checks[2].record(got == Ok(want), lambda, None, || {
                format!("{} {w}: engine {got:?}, table {want:?}", r.parabolic)
            });
        }
    });
    VerificationReport { checks }
}

/// First degree where the two spaces differ as multisets.
pub fn first_difference(x: &GradedSpace, y: &GradedSpace) -> Option<usize> {
    let (x, y) = (x.sorted(), y.sorted());
    (0..=TOP_DEGREE).find(|&q| x.degree(q) != y.degree(q))
}

/// Engine against table. Case 1 tables leave out the zero spaces `S_4` and
/// `S_6`, so that case is compared after pruning.
pub fn table_difference(lambda: HighestWeight, engine: &GradedSpace, table: &GradedSpace) -> Option<usize> {
    if classify_case(lambda) == 1 {
        first_difference(&engine.pruned(), &table.pruned())
    } else {
        first_difference(engine, table)
    }
}

/// `S_k` in place of a split summand.
fn ambient(s: &CohSummand) -> CohSummand {
    match s {
        CohSummand::Cusp { k, .. } => CohSummand::cusp(*k),
        CohSummand::Unit => CohSummand::Unit,
    }
}

/// Oracle modes exercised by the grid verifier.
pub fn verification_oracles() -> Vec<LOracle> {
    vec![LOracle::Symbolic, LOracle::AllNonzero, LOracle::AllZero, LOracle::SignHeuristic]
}

pub fn verify_boundary_and_eis(grid: u32) -> VerificationReport {
    let oracles = verification_oracles();
    let concrete: Vec<&LOracle> = oracles.iter().filter(|o| o.is_concrete()).collect();
    let mut names = vec![
        "boundary engine = closed-form table".to_string(),
        "boundary Poincare duality".to_string(),
        "Eisenstein engine = closed-form table".to_string(),
        "Eisenstein summands occur in the boundary".to_string(),
    ];
    for o in &concrete {
        names.push(format!("Eisenstein half dimension [{}]", o.name()));
        names.push(format!("Eisenstein complementarity [{}]", o.name()));
    }
    let checks = sweep(grid, &names, |lambda, checks| {
        let boundary = boundary_cohomology(lambda);
        let table = bdg2_reference(lambda);
        let diff = table_difference(lambda, &boundary, &table);
        checks[0].record(diff.is_none(), lambda, diff, || format!("engine {boundary}; table {table}"));

        let bd = boundary.plain_dims();
        for q in 0..=TOP_DEGREE {
            checks[1].record(bd[q] == bd[TOP_DEGREE - q], lambda, Some(q), || {
                format!("dim H^{q} = {}, dim H^{} = {}", bd[q], TOP_DEGREE - q, bd[TOP_DEGREE - q])
            });
        }

        for oracle in &oracles {
            let (eis, eis_table) = match (eisenstein_cohomology(lambda, oracle), eiscoh_reference(lambda, oracle)) {
                (Ok(e), Ok(t)) => (e, t),
                (e, t) => {
                    checks[2].record(false, lambda, None, || format!("[{}] {e:?} / {t:?}", oracle.name()));
                    continue;
                }
            };
            let diff = table_difference(lambda, &eis, &eis_table);
            checks[2].record(diff.is_none(), lambda, diff, || {
                format!("[{}] engine {eis}; table {eis_table}", oracle.name())
            });
            if !oracle.is_concrete() {
                for q in 0..=TOP_DEGREE {
                    let mut pool: Vec<CohSummand> = boundary.degree(q).to_vec();
                    let mut missing = None;
                    for s in eis.degree(q) {
                        match pool.iter().position(|b| *b == ambient(s)) {
                            Some(i) => {
                                pool.swap_remove(i);
                            }
                            None => missing = Some(*s),
                        }
                    }
                    checks[3].record(missing.is_none(), lambda, Some(q), || format!("{missing:?} not in boundary"));
                }
            }
        }

        for (i, oracle) in concrete.iter().enumerate() {
            let (half, comp) = (4 + 2 * i, 5 + 2 * i);
            let ed = match eisenstein_cohomology(lambda, oracle).and_then(|e| e.dims(oracle)) {
                Ok(d) => d.map(|x| x.expect("concrete oracle resolves every summand")),
                Err(e) => {
                    checks[half].record(false, lambda, None, || e.to_string());
                    continue;
                }
            };
            let (te, tb): (u64, u64) = (ed.iter().sum(), bd.iter().sum());
            checks[half].record(2 * te == tb, lambda, None, || format!("Σ dim H_Eis = {te}, Σ dim H(∂) = {tb}"));
            for q in 0..=TOP_DEGREE {
                checks[comp].record(ed[q] + ed[TOP_DEGREE - q] == bd[q], lambda, Some(q), || {
                    format!("{} + {} != {}", ed[q], ed[TOP_DEGREE - q], bd[q])
                });
            }
        }
    });
    VerificationReport { checks }
}

/// Involution on `W^P` over `[0..8]²`: lengths, shared `a`, and the sum of
/// the central coordinates.
pub fn verify_involution() -> VerificationReport {
    let grid = 8;
    let names = ["involution length sum".to_string(), "involution Levi coordinate identities".to_string()];
    let checks = sweep(grid, &names, |lambda, checks| {
        for p in Parabolic::MAXIMAL {
            let b_sum = -2 * p.rho_b().expect("maximal");
            for w in weyl::kostant_representatives(p) {
                let w2 = weyl::involution(w, p).expect("Kostant representative");
                checks[0].record(w.length + w2.length == p.dim_nilradical(), lambda, None, || {
                    format!("{p}: ℓ({w}) + ℓ({w2}) != {}", p.dim_nilradical())
                });
                let x = levi_coordinates(w, lambda, p).expect("Kostant representative");
                let y = levi_coordinates(w2, lambda, p).expect("Kostant representative");
                checks[1].record(x.a == y.a && x.b + y.b == b_sum, lambda, None, || {
                    format!("{p} ({w}, {w2}): a = ({}, {}), b sum = {}", x.a, y.a, x.b + y.b)
                });
            }
        }
    });
    VerificationReport { checks }
}

/// Pole order at the special point of every long representative, against
/// the residual configurations, under the nonvanishing oracle.
pub fn verify_poles(grid: u32) -> VerificationReport {
    let names = ["pole order vs residual configurations".to_string()];
    let oracle = LOracle::AllNonzero;
    let checks = sweep(grid, &names, |lambda, checks| {
        let pairs = inner_pairs(lambda);
        for p in Parabolic::MAXIMAL {
            for w in eisenstein::long_representatives(p) {
                let order = pole_order_at(p, w, lambda, &oracle);
                let flagged = pairs.iter().any(|x| x.parabolic == p && x.long_rep == w && exceptional_residual(x, lambda));
                let expected = match p {
                    Parabolic::P1 => w.label == 7 && lambda.m2 == 0,
                    _ => w.label == 6 && lambda.m1 == 0,
                };
                let want = i32::from(expected);
                checks[0].record(order == Ok(want) && flagged == expected, lambda, None, || {
                    format!("{p} {w}: order {order:?}, residual flag {flagged}, expected {want}")
                });
            }
        }
    });
    VerificationReport { checks }
}

/// Everything `g2coh verify` runs.
pub fn verify_all(grid: u32, inject_fault: bool) -> VerificationReport {
    let mut report = if inject_fault {
        verify_weyl_tables_with(&WeylTable::builtin().with_fault(), grid)
    } else {
        verify_weyl_tables(grid)
    };
    report.extend(verify_boundary_and_eis(grid));
    report.extend(verify_involution());
    report.extend(verify_poles(grid));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grids_pass() {
        let r = verify_weyl_tables(5);
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks[0].comparisons, 12 * 36);
        assert!(verify_weyl_tables(0).passed());
        assert!(verify_boundary_and_eis(4).passed());
        assert!(verify_involution().passed());
        assert!(verify_poles(4).passed());
    }

    #[test]
    fn fault_is_caught() {
        let r = verify_all(2, true);
        assert!(!r.passed());
        let bad = r.failures().next().unwrap();
        let x = bad.counterexample.as_ref().unwrap();
        assert_eq!(x.lambda, HighestWeight::new(0, 0));
        assert!(x.detail.starts_with("w4"), "{}", x.detail);
        assert!(r.to_string().contains("FAIL dot action"));
    }

    #[test]
    fn difference_detection() {
        let mut x = GradedSpace::new();
        x.push(2, CohSummand::Unit);
        let y = GradedSpace::new();
        assert_eq!(first_difference(&x, &y), Some(2));
        assert_eq!(first_difference(&x, &x), None);
    }
}
