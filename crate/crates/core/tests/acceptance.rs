//! Acceptance suite: the seven gate criteria for this crate, one test
//! per criterion. Each prints a `ACCEPTANCE <n> ... PASS` line with
//! its runtime (visible with `cargo test -- --nocapture` or
//! `--show-output`).

use qmono::cli;
use qmono::ineq;
use qmono::measures::{self, MeasureKind};
use qmono::monogamy::{self, BoundParams, CurveTable};
use qmono::qstate::{self, AcinParams, SweepRng};
use qmono::verify;
use rand::SeedableRng;
use std::time::{Duration, Instant};

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn finish(n: u32, name: &str, start: Instant, limit: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= limit,
        "criterion {n} exceeded its runtime budget: {elapsed:?} > {limit:?}"
    );
    println!("ACCEPTANCE {n} {name}: PASS ({elapsed:?})");
}

#[test]
fn acceptance_1_example_i_reproduction() {
    let start = Instant::now();

    let (cf_rest, cf_ab, cf_ac) = qstate::closed_form_concurrences(&AcinParams::example_i());
    let (pl_rest, pl_ab, pl_ac) = cli::example_i_measures().unwrap();
    for (value, expect) in [
        (cf_rest, SQRT2 / 2.0),
        (cf_ab, 0.5),
        (cf_ac, SQRT2 / 4.0),
        (pl_rest, SQRT2 / 2.0),
        (pl_ab, 0.5),
        (pl_ac, SQRT2 / 4.0),
    ] {
        assert!(
            (value - expect).abs() < 1e-9,
            "expected {expect}, got {value}"
        );
    }
    let t = (cf_ac * cf_ac) / (cf_ab * cf_ab);
    assert!((t - 0.5).abs() < 1e-12, "t = {t}");

    finish(1, "example-i concurrences", start, Duration::from_secs(1));
}

#[test]
fn acceptance_2_example_ii_reproduction() {
    let start = Instant::now();

    // pairwise values must come from reduced density matrices
    let (n_rest, n_ab, n_ac) = cli::example_ii_measures().unwrap();
    assert!((n_rest - 2.0 * 10f64.sqrt() / 9.0).abs() < 1e-9);
    assert!((n_ab - 4.0 / 9.0).abs() < 1e-9);
    assert!((n_ac - 2.0 * 3f64.sqrt() / 9.0).abs() < 1e-9);

    finish(2, "example-ii CREN values", start, Duration::from_secs(1));
}

#[test]
fn acceptance_3_example_iii_reproduction() {
    let start = Instant::now();

    let ex = cli::example_iii_measures().unwrap();
    assert!((ex.eb_ab - 0.14989).abs() < 5e-6, "EB(AB) = {}", ex.eb_ab);
    assert!((ex.eb_ac - 0.05279).abs() < 5e-6, "EB(AC) = {}", ex.eb_ac);
    assert!((ex.tau2 - 2.83936).abs() < 5e-6, "tau2 = {}", ex.tau2);

    finish(3, "example-iii Bures values", start, Duration::from_secs(1));
}

fn check_grid(table: &CurveTable, start: f64, end: f64, step: f64) {
    assert!((table.alphas[0] - start).abs() < 1e-12);
    assert!((table.alphas.last().unwrap() - end).abs() < 1e-9);
    for w in table.alphas.windows(2) {
        assert!((w[1] - w[0] - step).abs() < 1e-9);
    }
}

#[test]
fn acceptance_4_figure_orderings() {
    let start = Instant::now();

    let f1 = cli::figure1_table().unwrap();
    let f2 = cli::figure2_table().unwrap();
    let f3 = cli::figure3_table().unwrap();
    check_grid(&f1, 6.0, 20.0, 0.25);
    check_grid(&f2, 6.0, 20.0, 0.25);
    check_grid(&f3, 3.0, 12.0, 0.25);

    for (name, table) in [("Z", &f1), ("W", &f2), ("T", &f3)] {
        let violation = table.max_ordering_violation();
        assert!(
            violation <= 1e-12,
            "{name} columns out of order by {violation:.3e}"
        );
        // the m-term is strictly positive for all three examples, so
        // the first column must strictly dominate the second row-wise
        let gap = table.min_first_gap();
        assert!(
            gap > 0.0,
            "{name}1 does not strictly exceed {name}2: {gap:.3e}"
        );
    }

    finish(4, "figure orderings", start, Duration::from_secs(5));
}

#[test]
fn acceptance_5_inequality_sweeps() {
    let start = Instant::now();

    let report = verify::run_all(cli::DEFAULT_SEED, 1, verify::worker_count());
    let wanted: [(&str, u64); 6] = [
        ("ineq/case1-soundness", 100_000),
        ("ineq/case2-soundness", 100_000),
        ("ineq/k1-specialization", 10_000),
        ("ineq/h-monotone", 10_000),
        ("ineq/chain-ordering", 10_000),
        ("monogamy/power-sum", 10_000),
    ];
    for (name, min_samples) in wanted {
        let suite = report
            .suites
            .iter()
            .find(|s| s.name == name)
            .unwrap_or_else(|| panic!("suite {name} missing"));
        assert!(
            suite.samples >= min_samples,
            "{name}: only {} samples",
            suite.samples
        );
        assert!(
            suite.pass,
            "{name}: violation {:.3e} at {}",
            suite.max_violation, suite.worst_case
        );
    }

    finish(5, "inequality sweeps", start, Duration::from_secs(30));
}

/// Shared soundness check for criterion 6: monogamy of the gamma-th
/// powers plus every applicable bound staying below the full-split
/// power across the admissible alpha grid.
fn check_state_soundness(s: &qstate::PureState, tag: &str) {
    let (m, k) = (2.0, 0.8);
    for kind in MeasureKind::ALL {
        let gamma = kind.gamma();
        let truth = measures::measure(kind, s, 0, None).unwrap();
        let pairs: Vec<f64> = (1..s.n_subsystems())
            .map(|b| measures::measure(kind, s, 0, Some(b)).unwrap())
            .collect();

        // gamma-th-power monogamy with -1e-9 slack (concurrence and
        // CREN by construction, Bures per its gamma = 1 relation)
        let sum: f64 = pairs.iter().map(|e| e.powf(gamma)).sum();
        let lhs = truth.powf(gamma);
        assert!(
            sum - lhs <= 1e-9 * lhs.max(1.0),
            "{tag}: monogamy violated for {}: {sum} > {lhs}",
            kind.label()
        );

        let mut sorted = pairs.clone();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        if sorted[1] <= 1e-12 || truth <= 1e-12 {
            continue; // bounds assume strictly positive measures
        }
        let a_min = ineq::alpha_min(m, gamma);
        for step in 0..=8u32 {
            let alpha = a_min + (a_min + 6.0) * f64::from(step) / 8.0;
            let p = BoundParams::new(alpha, gamma, m, k).unwrap();
            let truth_pow = truth.powf(alpha);
            let mut candidates: Vec<(&str, f64)> = Vec::new();
            if let Ok(v) = monogamy::tripartite_bound(sorted[0], sorted[1], &p.with_k(1.0).unwrap())
            {
                candidates.push(("pair-k1", v));
            }
            if let Ok(v) = monogamy::tripartite_bound_with_ratio(sorted[0], sorted[1], &p) {
                candidates.push(("pair-ratio", v));
            }
            if let Ok(v) = monogamy::descending_order_bound(&sorted, &p) {
                candidates.push(("descending", v));
            }
            if let Ok(chain) = monogamy::descending_order_chain(&sorted, &p) {
                candidates.push(("chain-max", chain.full.max(chain.m_zero)));
            }
            if kind == MeasureKind::Bures {
                if let Ok(v) = monogamy::ordered_power_bound(&sorted, alpha) {
                    candidates.push(("ordered-powers", v));
                }
            }
            for (what, v) in candidates {
                assert!(
                    v <= truth_pow * (1.0 + 1e-9),
                    "{tag}: {what} bound {v} above truth {truth_pow} \
                     ({} alpha {alpha})",
                    kind.label()
                );
            }
        }
    }
}

#[test]
fn acceptance_6_soundness_vs_truth() {
    let start = Instant::now();

    let mut rng = SweepRng::seed_from_u64(cli::DEFAULT_SEED);
    for i in 0..500 {
        let params = qstate::random_acin_params_with(&mut rng);
        let s = qstate::acin_state(&params).unwrap();
        check_state_soundness(&s, &format!("acin[{i}]"));
    }
    for i in 0..200 {
        let s = qstate::random_pure_state(3, 40_000 + i).unwrap();
        check_state_soundness(&s, &format!("haar3[{i}]"));
    }

    finish(
        6,
        "bound soundness vs truth",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn acceptance_7_specialization_regression() {
    let start = Instant::now();

    // m = 0 ratio bound must reproduce the second column of both
    // case-1 tables
    let (_, c_ab, c_ac) = cli::example_i_measures().unwrap();
    let (_, n_ab, n_ac) = cli::example_ii_measures().unwrap();
    let f1 = cli::figure1_table().unwrap();
    let f2 = cli::figure2_table().unwrap();
    for (table, e_ab, e_ac) in [(&f1, c_ab, c_ac), (&f2, n_ab, n_ac)] {
        for (alpha, row) in table.alphas.iter().zip(&table.rows) {
            let p = BoundParams::new(*alpha, 2.0, 0.0, 0.8).unwrap();
            let direct = monogamy::tripartite_bound_with_ratio(e_ab, e_ac, &p).unwrap();
            assert!(
                (direct - row[1]).abs() <= 1e-12,
                "alpha {alpha}: {direct} vs column {}",
                row[1]
            );
        }
    }

    // m = 0 descending bound (correction retained) must reproduce T2
    let f3 = cli::figure3_table().unwrap();
    let e = [cli::BURES_AB_REF, cli::BURES_AC_REF];
    for (alpha, row) in f3.alphas.iter().zip(&f3.rows) {
        let p = BoundParams::new(*alpha, 1.0, 0.0, 1.0).unwrap();
        let direct = monogamy::descending_order_bound(&e, &p).unwrap();
        assert!(
            (direct - row[1]).abs() <= 1e-12,
            "alpha {alpha}: {direct} vs T2 {}",
            row[1]
        );
    }

    finish(
        7,
        "m = 0 specialization regression",
        start,
        Duration::from_secs(5),
    );
}
