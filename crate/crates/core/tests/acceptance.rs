//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons.

mod common;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::{agrees, dims, g2_dim_polynomial, hw, reflection_group, valence_cusp_dim, SPOT_BOUNDARY_DIMS};
use g2coh::constant_terms::{c1_factors, c2_factors, pole_order, special_point};
use g2coh::eisenstein::{eisenstein_cohomology, exceptional_residual, inner_pairs};
use g2coh::levi_cohomology::levi_coordinates;
use g2coh::oracles::verify_weyl_tables;
use g2coh::reference::{bdg2_reference, eiscoh_reference};
use g2coh::spectral::boundary_cohomology;
use g2coh::weights::weyl_dim_g2;
use g2coh::weyl::{self, Parabolic};
use g2coh::{HighestWeight, LOracle, Rational, Weight};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid(n: u32) -> impl Iterator<Item = HighestWeight> {
    HighestWeight::grid(n, n)
}

fn criterion_weyl_group() -> Outcome {
    let start = Instant::now();
    let group = weyl::generate_weyl_group();
    ensure(group.len() == 12, || format!("{} elements", group.len()))?;
    let mut lengths: Vec<u32> = group.iter().map(|w| w.length).collect();
    lengths.sort();
    ensure(lengths == vec![0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6], || format!("lengths {lengths:?}"))?;
    let longest: Vec<_> = group.iter().filter(|w| w.length == 6).collect();
    ensure(longest.len() == 1 && longest[0].matrix == [[-1, 0], [0, -1]], || "longest element is not -I".into())?;

    // Same group from reflections in the invariant form.
    let images: BTreeSet<(Weight, Weight)> = reflection_group().into_iter().collect();
    let engine: BTreeSet<(Weight, Weight)> = group
        .iter()
        .map(|w| (w.apply(Weight::ALPHA1), w.apply(Weight::ALPHA2)))
        .collect();
    ensure(images == engine, || "engine matrices differ from the reflection group".into())?;

    let report = verify_weyl_tables(8);
    ensure(report.passed(), || report.to_string())?;
    let comparisons: u64 = report.checks.iter().map(|c| c.comparisons).sum();
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_millis(100), || format!("took {elapsed:?}"))?;
    Ok(format!("12 elements, {comparisons} closed-form comparisons on [0..8]^2 in {elapsed:.2?}"))
}

fn criterion_kostant_sets() -> Outcome {
    let words = |p| -> Vec<String> { weyl::kostant_representatives(p).iter().map(|w| w.word_string()).collect() };
    let p1 = ["1", "s2", "s2s1", "s2s1s2", "s2s1s2s1", "s2s1s2s1s2"];
    let p2 = ["1", "s1", "s1s2", "s1s2s1", "s1s2s1s2", "s1s2s1s2s1"];
    ensure(words(Parabolic::P1) == p1, || format!("W^P1 = {:?}", words(Parabolic::P1)))?;
    ensure(words(Parabolic::P2) == p2, || format!("W^P2 = {:?}", words(Parabolic::P2)))?;
    ensure(weyl::kostant_representatives(Parabolic::P0).len() == 12, || "W^P0 is not all of W".into())?;

    let mut pairs = 0;
    for p in Parabolic::ALL {
        let levi_root = p.levi_root();
        for w in weyl::generate_weyl_group() {
            // w(Φ⁻) ∩ Φ⁺ avoids the Levi root.
            let inversions: Vec<Weight> = g2coh::weights::POSITIVE_ROOTS
                .iter()
                .map(|&r| w.apply(-r))
                .filter(|r| r.is_positive_root())
                .collect();
            let by_roots = levi_root.is_none_or(|a| !inversions.contains(&a));
            let by_length = p.levi_reflection().is_none_or(|s| s.compose(w).length > w.length);
            ensure(by_roots == by_length && by_roots == weyl::is_kostant(w, p), || format!("{w} {p}"))?;
            pairs += 1;
        }
    }
    Ok(format!("W^P1, W^P2 match; criteria agree on {pairs} pairs"))
}

fn criterion_involution() -> Outcome {
    let mut checks = 0;
    for p in Parabolic::MAXIMAL {
        let w_m = p.levi_reflection().unwrap();
        let b_sum = if p == Parabolic::P1 { -6 } else { -10 };
        for w in weyl::kostant_representatives(p) {
            let w2 = weyl::involution(w, p).map_err(|e| e.to_string())?;
            let direct = w_m.compose(w).compose(weyl::longest());
            ensure(direct == w2, || format!("{p} {w}: {w2} != {direct}"))?;
            ensure(w.length + w2.length == 5, || format!("{p} {w}: length sum"))?;
            for lambda in grid(8) {
                let x = levi_coordinates(w, lambda, p).map_err(|e| e.to_string())?;
                let y = levi_coordinates(w2, lambda, p).map_err(|e| e.to_string())?;
                ensure(x.a == y.a && x.b + y.b == b_sum, || format!("{p} ({w}, {w2}) at {lambda}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} coordinate identities on [0..8]^2"))
}

fn criterion_boundary() -> Outcome {
    let start = Instant::now();
    let mut cases = BTreeSet::new();
    for lambda in grid(10) {
        let engine = boundary_cohomology(lambda);
        let table = bdg2_reference(lambda);
        ensure(agrees(lambda, &engine, &table), || format!("{lambda}: engine {engine}, table {table}"))?;
        cases.insert(g2coh::spectral::classify_case(lambda));
    }
    ensure(cases.len() == 9, || format!("cases covered: {cases:?}"))?;
    for ((m1, m2), want) in SPOT_BOUNDARY_DIMS {
        let got = dims(&boundary_cohomology(hw(m1, m2)), &LOracle::Symbolic);
        ensure(got == want, || format!("({m1}, {m2}): dims {got:?}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("121 weights, all 9 cases, 4 spot vectors in {elapsed:.2?}"))
}

fn criterion_duality() -> Outcome {
    for lambda in grid(10) {
        let d = dims(&boundary_cohomology(lambda), &LOracle::Symbolic);
        for q in 0..8 {
            ensure(d[q] == d[7 - q], || format!("{lambda}: dim H^{q} = {}, dim H^{} = {}", d[q], 7 - q, d[7 - q]))?;
        }
    }
    Ok("dim H^q = dim H^(7-q) on [0..10]^2".into())
}

fn criterion_eisenstein() -> Outcome {
    for lambda in grid(10) {
        let engine = eisenstein_cohomology(lambda, &LOracle::Symbolic).map_err(|e| e.to_string())?;
        let table = eiscoh_reference(lambda, &LOracle::Symbolic).map_err(|e| e.to_string())?;
        ensure(agrees(lambda, &engine, &table), || format!("{lambda}: engine {engine}, table {table}"))?;
    }
    let concrete = [LOracle::AllNonzero, LOracle::AllZero, LOracle::SignHeuristic];
    for oracle in &concrete {
        for lambda in grid(10) {
            let b = dims(&boundary_cohomology(lambda), oracle);
            let e = dims(&eisenstein_cohomology(lambda, oracle).map_err(|e| e.to_string())?, oracle);
            let (te, tb): (u64, u64) = (e.iter().sum(), b.iter().sum());
            ensure(2 * te == tb, || format!("[{}] {lambda}: {te} vs {tb}", oracle.name()))?;
            for q in 0..8 {
                ensure(e[q] + e[7 - q] == b[q], || format!("[{}] {lambda} q = {q}", oracle.name()))?;
            }
        }
    }
    let d = dims(&eisenstein_cohomology(hw(2, 2), &LOracle::Symbolic).unwrap(), &LOracle::Symbolic);
    ensure(d[4] == 1 && d[6] == 1 && d[4] == valence_cusp_dim(16), || format!("(2, 2): {d:?}"))?;
    let d = dims(&eisenstein_cohomology(hw(0, 2), &LOracle::AllZero).unwrap(), &LOracle::AllZero);
    ensure(d[3] == 0 && d[4] == 1, || format!("(0, 2) all-zero: {d:?}"))?;
    Ok("table equality on [0..10]^2; half dimension and complementarity under 3 oracles".into())
}

fn criterion_poles() -> Outcome {
    let long_reps = [(Parabolic::P1, [7u8, 9, 11]), (Parabolic::P2, [6u8, 8, 10])];
    let mut checked = 0;
    for lambda in grid(8) {
        let pairs = inner_pairs(lambda);
        for (p, labels) in long_reps {
            for label in labels {
                let w = weyl::element(label);
                let lw = levi_coordinates(w, lambda, p).map_err(|e| e.to_string())?;
                let k = u32::try_from(lw.a + 2).unwrap();
                let point = special_point::<Rational>(p, w, lambda).map_err(|e| e.to_string())?;
                let tokens = if p == Parabolic::P1 { c1_factors() } else { c2_factors() };
                let expected = match p {
                    Parabolic::P1 => label == 7 && lambda.m2 == 0,
                    _ => label == 6 && lambda.m1 == 0,
                };
                for oracle in [LOracle::AllNonzero, LOracle::AllZero] {
                    let order = pole_order(&tokens, &point, &oracle, k).map_err(|e| e.to_string())?;
                    let want = i32::from(expected && oracle == LOracle::AllNonzero);
                    ensure(order == want, || format!("{p} w{label} {lambda} [{}]: order {order}", oracle.name()))?;
                }
                let flagged =
                    pairs.iter().any(|x| x.parabolic == p && x.long_rep == w && exceptional_residual(x, lambda));
                ensure(flagged == expected, || format!("{p} w{label} {lambda}: residual flag {flagged}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (P, w, λ) triples; poles exactly at the residual configurations"))
}

fn criterion_weyl_dimension() -> Outcome {
    let basics = [((0, 0), 1), ((1, 0), 7), ((0, 1), 14)];
    for ((m1, m2), want) in basics {
        let got = weyl_dim_g2(hw(m1, m2));
        ensure(got == want, || format!("({m1}, {m2}) -> {got}"))?;
    }
    for lambda in grid(20) {
        let got = weyl_dim_g2(lambda);
        let want = g2_dim_polynomial(u64::from(lambda.m1), u64::from(lambda.m2));
        ensure(got == want, || format!("{lambda}: {got} vs {want}"))?;
    }
    Ok("1, 7, 14 at the basic weights; integral on [0..20]^2".into())
}

fn run_cli(args: &[&str]) -> Result<(Duration, std::process::Output), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_g2coh")).args(args).output().map_err(|e| e.to_string())?;
    Ok((start.elapsed(), out))
}

fn criterion_performance() -> Outcome {
    let (t_verify, out) = run_cli(&["verify", "--grid", "10"])?;
    ensure(out.status.code() == Some(0), || String::from_utf8_lossy(&out.stdout).into_owned())?;
    ensure(t_verify < Duration::from_secs(1), || format!("verify took {t_verify:?}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let paths = [dir.path().join("a.jsonl"), dir.path().join("b.jsonl")];
    let mut t_sweep = Duration::ZERO;
    for path in &paths {
        let p = path.to_str().unwrap();
        let (t, out) = run_cli(&["sweep", "--m1-max", "50", "--m2-max", "50", "--out", p])?;
        ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
        ensure(t < Duration::from_secs(5), || format!("sweep took {t:?}"))?;
        t_sweep = t_sweep.max(t);
    }
    let a = std::fs::read(&paths[0]).map_err(|e| e.to_string())?;
    let b = std::fs::read(&paths[1]).map_err(|e| e.to_string())?;
    ensure(a == b, || "sweeps differ".into())?;
    let lines = a.iter().filter(|&&c| c == b'\n').count();
    ensure(lines == 51 * 51, || format!("{lines} lines"))?;
    Ok(format!("verify {t_verify:.2?}, sweep 51x51 {t_sweep:.2?}, byte-identical"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Weyl group", criterion_weyl_group),
        ("Kostant sets", criterion_kostant_sets),
        ("involution", criterion_involution),
        ("boundary cohomology", criterion_boundary),
        ("Poincare duality", criterion_duality),
        ("Eisenstein cohomology", criterion_eisenstein),
        ("pole detection", criterion_poles),
        ("representation dimension", criterion_weyl_dimension),
        ("performance and determinism", criterion_performance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
