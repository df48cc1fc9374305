//! Randomized verification sweeps: every documented invariant of the
//! matrix, state, measure, kernel and bound layers, runnable from the
//! CLI (`qmono verify`) and from the acceptance tests.
//!
//! Determinism contract: suite i draws from a ChaCha8 generator seeded
//! with `seed + i`, so reports are byte-identical for a fixed seed no
//! matter how many worker threads execute the queue.

use crate::cmatrix::{Complex64, ComplexMatrix};
use crate::error::Result;
use crate::ineq;
use crate::measures::{self, MeasureKind};
use crate::monogamy::{self, BoundParams};
use crate::qstate::{self, SweepRng};
use rand::{Rng, SeedableRng};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Outcome of one verification suite.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub samples: u64,
    pub max_violation: f64,
    pub tolerance: f64,
    pub worst_case: String,
    pub pass: bool,
}

impl SuiteResult {
    fn from_tracker(name: &'static str, tolerance: f64, t: Tracker) -> Self {
        SuiteResult {
            name,
            samples: t.samples,
            max_violation: t.max_violation,
            tolerance,
            worst_case: t.worst_case,
            pass: t.max_violation <= tolerance,
        }
    }
}

/// Running worst-case accumulator.
struct Tracker {
    samples: u64,
    max_violation: f64,
    worst_case: String,
}

impl Tracker {
    fn new() -> Self {
        Tracker {
            samples: 0,
            max_violation: f64::NEG_INFINITY,
            worst_case: String::new(),
        }
    }

    fn record(&mut self, violation: f64, describe: impl FnOnce() -> String) {
        self.samples += 1;
        if violation > self.max_violation {
            self.max_violation = violation;
            self.worst_case = describe();
        }
    }
}

fn rel(excess: f64, reference: f64) -> f64 {
    excess / reference.abs().max(1.0)
}

/// Full verification report.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub seed: u64,
    pub factor: u64,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.suites.iter().all(|s| s.pass)
    }

    /// Deterministic text summary: one CSV line per suite, then a
    /// result line; failing suites append replay diagnostics.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("seed,{}\n", self.seed));
        out.push_str("suite,samples,max_violation,tolerance,status\n");
        for s in &self.suites {
            out.push_str(&format!(
                "{},{},{:.16e},{:.16e},{}\n",
                s.name,
                s.samples,
                s.max_violation,
                s.tolerance,
                if s.pass { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "result,{}\n",
            if self.all_pass() { "pass" } else { "FAIL" }
        ));
        for s in &self.suites {
            if !s.pass {
                out.push_str(&format!(
                    "# FAIL {}: worst input {} (violation {:.16e})\n",
                    s.name, s.worst_case, s.max_violation
                ));
            }
        }
        out
    }
}

/// Worker-pool size: MONOGAMY_THREADS when set, otherwise the
/// available parallelism.
pub fn worker_count() -> usize {
    std::env::var("MONOGAMY_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

type SuiteFn = Box<dyn Fn(u64, u64) -> SuiteResult + Send + Sync>;

fn suite_list() -> Vec<SuiteFn> {
    vec![
        Box::new(|seed, f| partial_trace_composition(seed, 50 * f)),
        Box::new(|seed, f| eigen_contract(seed, 40 * f)),
        Box::new(|seed, f| kron_trace(seed, 200 * f)),
        Box::new(|seed, f| closed_form_agreement(seed, 200 * f)),
        Box::new(|seed, f| reduced_density_contract(seed, 100 * f)),
        Box::new(|seed, f| monogamy_relation(seed, 1000 * f, 200 * f, MeasureKind::Concurrence)),
        Box::new(|seed, f| monogamy_relation(seed, 1000 * f, 200 * f, MeasureKind::Cren)),
        Box::new(|_, _| bures_monotone(10_000)),
        Box::new(|seed, f| {
            case1_soundness(seed, 100_000 * f, &|t, k, x, m| ineq::case1_rhs(t, k, x, m))
        }),
        Box::new(|seed, f| case2_soundness(seed, 100_000 * f)),
        Box::new(|seed, f| k1_specialization(seed, 10_000 * f)),
        Box::new(|seed, f| h_monotone(seed, 10_000 * f)),
        Box::new(|seed, f| chain_ordering(seed, 10_000 * f)),
        Box::new(|seed, f| soundness_acin(seed, 500 * f)),
        Box::new(|seed, f| specialization_ladder(seed, 10_000 * f)),
        Box::new(|seed, f| m_monotone(seed, 10_000 * f)),
        Box::new(|seed, f| power_sum(seed, 10_000 * f)),
        Box::new(|_, _| figure_orderings()),
    ]
}

/// Run every suite. `factor` scales the per-suite sample counts;
/// `threads` caps the worker pool.
pub fn run_all(seed: u64, factor: u64, threads: usize) -> VerifyReport {
    let suites = suite_list();
    let factor = factor.max(1);
    let results: Vec<Mutex<Option<SuiteResult>>> =
        suites.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = threads.clamp(1, suites.len());

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= suites.len() {
                    break;
                }
                let r = (suites[i])(seed.wrapping_add(i as u64), factor);
                *results[i].lock().unwrap() = Some(r);
            });
        }
    });

    VerifyReport {
        seed,
        factor,
        suites: results
            .into_iter()
            .map(|m| m.into_inner().unwrap().expect("suite executed"))
            .collect(),
    }
}

fn random_matrix(dim: usize, rng: &mut SweepRng) -> ComplexMatrix {
    let data: Vec<Complex64> = (0..dim * dim)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    ComplexMatrix::new(dim, data).unwrap()
}

fn random_density(dim: usize, rng: &mut SweepRng) -> ComplexMatrix {
    let g = random_matrix(dim, rng);
    let psd = g.matmul(&g.adjoint()).unwrap();
    psd.scale(Complex64::new(1.0 / psd.trace().re, 0.0))
}

fn partial_trace_composition(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    let dims = [2usize, 2, 2];
    for i in 0..n {
        let rho = random_density(8, &mut rng);
        let direct = rho.partial_trace(&dims, &[0]).unwrap();
        let via_ab = rho
            .partial_trace(&dims, &[0, 1])
            .unwrap()
            .partial_trace(&[2, 2], &[0])
            .unwrap();
        let via_ac = rho
            .partial_trace(&dims, &[0, 2])
            .unwrap()
            .partial_trace(&[2, 2], &[0])
            .unwrap();
        let trace_drift = (direct.trace().re - 1.0).abs();
        let v = via_ab
            .max_abs_diff(&direct)
            .max(via_ac.max_abs_diff(&direct))
            .max(trace_drift);
        t.record(v, || format!("sample {i} (seed {seed})"));
    }
    SuiteResult::from_tracker("cmatrix/partial-trace-composition", 1e-12, t)
}

fn eigen_contract(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for i in 0..n {
        let dim = 1 << rng.gen_range(1..=3usize);
        let g = random_matrix(dim, &mut rng);
        let h = g.add(&g.adjoint()).unwrap().scale(Complex64::new(0.5, 0.0));
        let (eigs, v) = h.hermitian_eig().unwrap();
        let mut worst = 0.0f64;
        for (idx, &mu) in eigs.iter().enumerate() {
            let mut res = 0.0;
            for row in 0..dim {
                let hv: Complex64 = (0..dim).map(|k| h.get(row, k) * v.get(k, idx)).sum();
                res += (hv - v.get(row, idx) * mu).norm_sqr();
            }
            worst = worst.max(res.sqrt());
        }
        let gram = v.adjoint().matmul(&v).unwrap();
        worst = worst.max(gram.max_abs_diff(&ComplexMatrix::identity(dim)));

        // Spectrum is invariant under conjugation by a product unitary.
        if dim == 4 {
            let u = random_two_qubit_product_unitary(&mut rng);
            let conj = u.matmul(&h).unwrap().matmul(&u.adjoint()).unwrap();
            let (eigs2, _) = conj.hermitian_eig().unwrap();
            for (a, b) in eigs.iter().zip(&eigs2) {
                worst = worst.max((a - b).abs());
            }
        }
        t.record(worst, || format!("sample {i} dim {dim} (seed {seed})"));
    }
    SuiteResult::from_tracker("cmatrix/eigen-contract", 1e-9, t)
}

fn random_two_qubit_product_unitary(rng: &mut SweepRng) -> ComplexMatrix {
    let mut factor = || {
        use std::f64::consts::TAU;
        let theta: f64 = rng.gen_range(0.0..TAU);
        let (a, b, g): (f64, f64, f64) = (
            rng.gen_range(0.0..TAU),
            rng.gen_range(0.0..TAU),
            rng.gen_range(0.0..TAU),
        );
        let (c, s) = (theta.cos(), theta.sin());
        ComplexMatrix::new(
            2,
            vec![
                Complex64::from_polar(c, a),
                Complex64::from_polar(s, b),
                Complex64::from_polar(-s, g - b),
                Complex64::from_polar(c, g - a),
            ],
        )
        .unwrap()
    };
    let u = factor();
    let w = factor();
    u.kron(&w)
}

fn kron_trace(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for i in 0..n {
        let a = random_matrix(rng.gen_range(2..=3usize), &mut rng);
        let b = random_matrix(rng.gen_range(2..=3usize), &mut rng);
        let v = (a.kron(&b).trace() - a.trace() * b.trace()).norm();
        t.record(v, || format!("sample {i} (seed {seed})"));
    }
    SuiteResult::from_tracker("cmatrix/kron-trace", 1e-12, t)
}

fn closed_form_agreement(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for i in 0..n {
        // Random phi exercises the phase-independence of all three
        // closed forms.
        let p = qstate::random_acin_params_with(&mut rng);
        let s = qstate::acin_state(&p).unwrap();
        let (c_abc, c_ab, c_ac) = qstate::closed_form_concurrences(&p);
        let v_abc = (measures::concurrence_pure(&s, 0).unwrap() - c_abc).abs();
        let v_ab =
            (measures::wootters_concurrence(&s.reduced(&[0, 1]).unwrap()).unwrap() - c_ab).abs();
        let v_ac =
            (measures::wootters_concurrence(&s.reduced(&[0, 2]).unwrap()).unwrap() - c_ac).abs();
        t.record(v_abc.max(v_ab).max(v_ac), || {
            format!(
                "lambda {:?} phi {} (sample {i}, seed {seed})",
                p.lambda, p.phi
            )
        });
    }
    SuiteResult::from_tracker("qstate/closed-form-agreement", 1e-9, t)
}

fn reduced_density_contract(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for i in 0..n {
        let qubits = rng.gen_range(2..=4usize);
        let s = qstate::random_pure_state_with(qubits, &mut rng);
        let mut keeps: Vec<Vec<usize>> = (0..qubits).map(|q| vec![q]).collect();
        for a in 0..qubits {
            for b in (a + 1)..qubits {
                keeps.push(vec![a, b]);
            }
        }
        for keep in keeps {
            let r = s.reduced(&keep).unwrap();
            let v = match r.check_density() {
                Ok(()) => (r.trace().re - 1.0).abs(),
                Err(_) => 1.0,
            };
            t.record(v, || format!("sample {i} keep {keep:?} (seed {seed})"));
        }
    }
    SuiteResult::from_tracker("qstate/reduced-density-contract", 1e-12, t)
}

fn monogamy_relation(seed: u64, n3: u64, n4: u64, kind: MeasureKind) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    let gamma = kind.gamma();
    let check = |s: &qstate::PureState, tag: &str, i: u64, t: &mut Tracker| {
        let full = measures::measure(kind, s, 0, None).unwrap();
        let pair_sum: f64 = (1..s.n_subsystems())
            .map(|b| measures::measure(kind, s, 0, Some(b)).unwrap().powf(gamma))
            .sum();
        let v = rel(pair_sum - full.powf(gamma), full.powf(gamma));
        t.record(v, || format!("{tag} sample {i} (seed {seed})"));
    };
    for i in 0..n3 {
        let s = qstate::random_pure_state_with(3, &mut rng);
        check(&s, "3q", i, &mut t);
    }
    for i in 0..n4 {
        let s = qstate::random_pure_state_with(4, &mut rng);
        check(&s, "4q", i, &mut t);
    }
    let name = match kind {
        MeasureKind::Concurrence => "measures/monogamy-concurrence",
        MeasureKind::Cren => "measures/monogamy-cren",
        MeasureKind::Bures => "measures/monogamy-bures",
    };
    SuiteResult::from_tracker(name, 1e-9, t)
}

fn bures_monotone(points: u64) -> SuiteResult {
    let mut t = Tracker::new();
    let mut prev = measures::bures_from_concurrence(0.0).unwrap();
    for i in 1..=points {
        let c = i as f64 / points as f64;
        let b = measures::bures_from_concurrence(c).unwrap();
        // strictly increasing: any nonpositive step is a violation
        t.record(prev - b, || format!("grid point c = {c}"));
        prev = b;
    }
    SuiteResult::from_tracker("measures/bures-monotone", -f64::MIN_POSITIVE, t)
}

fn admissible_x(rng: &mut SweepRng, m: f64, hi: f64) -> f64 {
    let floor = 1.0 + (m + 2.0).log2();
    rng.gen_range(floor..hi.max(floor + 1e-9))
}

pub(crate) fn case1_soundness(
    seed: u64,
    n: u64,
    rhs: &(dyn Fn(f64, f64, f64, f64) -> Result<f64> + Sync),
) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for _ in 0..n {
        let m = rng.gen_range(0.0..6.0);
        let x = admissible_x(&mut rng, m, 12.0);
        let k = rng.gen_range(1e-3..1.0f64);
        let tt = k * rng.gen_range(1e-6..1.0f64);
        let lhs = (1.0 + tt).powf(x);
        let bound = rhs(tt, k, x, m).unwrap();
        // Two-sided: sound (below the binomial) and at least as strong
        // as its own m = 0 specialization.
        let m_zero = rhs(tt, k, x, 0.0).unwrap();
        let v = ((bound - lhs) / lhs).max((m_zero - bound) / m_zero);
        t.record(v, || format!("t={tt} k={k} x={x} m={m}"));
    }
    SuiteResult::from_tracker("ineq/case1-soundness", 1e-9, t)
}

fn case2_soundness(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for _ in 0..n {
        let m = rng.gen_range(0.0..6.0);
        let x = admissible_x(&mut rng, m, 12.0);
        let k = rng.gen_range(1.0..5.0f64);
        let tt = rng.gen_range(k..50.0f64.max(k + 1e-9));
        let lhs = (1.0 + tt).powf(x);
        let bound = ineq::case2_rhs(tt, k, x, m).unwrap();
        let m_zero = ineq::case2_rhs(tt, k, x, 0.0).unwrap();
        let v = ((bound - lhs) / lhs).max((m_zero - bound) / m_zero);
        t.record(v, || format!("t={tt} k={k} x={x} m={m}"));
    }
    SuiteResult::from_tracker("ineq/case2-soundness", 1e-9, t)
}

fn k1_specialization(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for _ in 0..n {
        let m = rng.gen_range(0.0..6.0);
        let x = admissible_x(&mut rng, m, 12.0);
        let tt = rng.gen_range(1e-3..1.0f64);
        let tx = tt.powf(x);
        let direct1 = 1.0 + (2f64.powf(x) - tx) * tx + m * x * (1.0 / tt - 1.0) * tx;
        let v1 = (ineq::case1_rhs(tt, 1.0, x, m).unwrap() - direct1).abs();
        let t2 = 1.0 / tt;
        let direct2 = t2.powf(x) + 2f64.powf(x) - t2.powf(-x) + m * x * (t2 - 1.0);
        let v2 = rel(
            (ineq::case2_rhs(t2, 1.0, x, m).unwrap() - direct2).abs(),
            direct2,
        );
        t.record(v1.max(v2), || format!("t={tt} x={x} m={m}"));
    }
    SuiteResult::from_tracker("ineq/k1-specialization", 1e-12, t)
}

fn h_monotone(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for _ in 0..n {
        let m = rng.gen_range(0.0..6.0);
        let x = admissible_x(&mut rng, m, 12.0);
        let y1 = rng.gen_range(1.0..30.0f64);
        let y2 = y1 + rng.gen_range(0.0..20.0f64);
        let a = ineq::h_kernel(x, y1, m).unwrap();
        let b = ineq::h_kernel(x, y2, m).unwrap();
        t.record(rel(a - b, a), || format!("x={x} y1={y1} y2={y2} m={m}"));
    }
    SuiteResult::from_tracker("ineq/h-monotone", 1e-12, t)
}

fn chain_ordering(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for _ in 0..n {
        let m = rng.gen_range(0.0..6.0);
        let x = admissible_x(&mut rng, m, 12.0);
        let k1 = rng.gen_range(1e-3..1.0f64);
        let t1 = k1 * rng.gen_range(1e-6..1.0f64);
        let c1 = ineq::case1_chain(t1, k1, x, m).unwrap().as_array();
        let mut worst = f64::NEG_INFINITY;
        for w in c1.windows(2) {
            worst = worst.max(rel(w[1] - w[0], w[0]));
        }
        let k2 = rng.gen_range(1.0..5.0f64);
        let t2 = rng.gen_range(k2..50.0f64.max(k2 + 1e-9));
        let c2 = ineq::case2_chain(t2, k2, x, m).unwrap().as_array();
        for w in c2.windows(2) {
            worst = worst.max(rel(w[1] - w[0], w[0]));
        }
        t.record(worst, || {
            format!("case1 (t={t1},k={k1}) case2 (t={t2},k={k2}) x={x} m={m}")
        });
    }
    SuiteResult::from_tracker("ineq/chain-ordering", 1e-12, t)
}

fn soundness_acin(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    let (m, k) = (2.0, 0.8);
    for i in 0..n {
        let p = qstate::random_acin_params_with(&mut rng);
        let s = qstate::acin_state(&p).unwrap();
        for kind in MeasureKind::ALL {
            let gamma = kind.gamma();
            let truth = measures::measure(kind, &s, 0, None).unwrap();
            let e_b = measures::measure(kind, &s, 0, Some(1)).unwrap();
            let e_c = measures::measure(kind, &s, 0, Some(2)).unwrap();
            let (e1, e2) = if e_b >= e_c { (e_b, e_c) } else { (e_c, e_b) };
            if e2 <= 1e-12 || truth <= 1e-12 {
                continue;
            }
            let a_min = ineq::alpha_min(m, gamma);
            for step in 0..=8u32 {
                let alpha = a_min + (a_min + 6.0) * step as f64 / 8.0;
                let params = BoundParams::new(alpha, gamma, m, k).unwrap();
                let truth_pow = truth.powf(alpha);
                let mut cands: Vec<f64> = Vec::new();
                for v in [
                    monogamy::tripartite_bound(e1, e2, &params.with_k(1.0).unwrap()),
                    monogamy::tripartite_bound_with_ratio(e1, e2, &params),
                    monogamy::descending_order_bound(&[e1, e2], &params),
                ]
                .into_iter()
                .flatten()
                {
                    cands.push(v);
                }
                if let Ok(chain) = monogamy::descending_order_chain(&[e1, e2], &params) {
                    cands.extend(chain.as_array());
                }
                if kind == MeasureKind::Bures {
                    if let Ok(v) = monogamy::ordered_power_bound(&[e1, e2], alpha) {
                        cands.push(v);
                    }
                }
                if !cands.is_empty() {
                    let worst = cands
                        .iter()
                        .map(|v| (v - truth_pow) / truth_pow)
                        .fold(f64::NEG_INFINITY, f64::max);
                    t.record(worst, || {
                        format!(
                            "{} lambda {:?} alpha {alpha} (sample {i}, seed {seed})",
                            kind.label(),
                            p.lambda
                        )
                    });
                }
            }
        }
    }
    SuiteResult::from_tracker("monogamy/soundness-acin", 1e-9, t)
}

fn specialization_ladder(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for _ in 0..n {
        let gamma = if rng.gen_bool(0.5) { 2.0 } else { 1.0 };
        let m = rng.gen_range(0.0..6.0);
        let alpha = ineq::alpha_min(m, gamma) + rng.gen_range(0.0..8.0);
        let e1 = rng.gen_range(0.05..1.0f64);
        let e2 = e1 * rng.gen_range(0.01..1.0f64).powf(1.0 / gamma);
        if e2 <= 1e-12 {
            continue;
        }
        let x = alpha / gamma;

        let p1 = BoundParams::new(alpha, gamma, m, 1.0).unwrap();
        let via_ratio = monogamy::tripartite_bound_with_ratio(e1, e2, &p1).unwrap();
        let direct = monogamy::tripartite_bound(e1, e2, &p1).unwrap();
        let mut worst = rel((via_ratio - direct).abs(), direct);

        // m = 0 collapses to the earlier bound families.
        let p0 = p1.with_m(0.0).unwrap();
        let tzjf =
            e1.powf(alpha) + (2f64.powf(x) - e2.powf(alpha) / e1.powf(alpha)) * e2.powf(alpha);
        worst = worst.max(rel(
            (monogamy::tripartite_bound(e1, e2, &p0).unwrap() - tzjf).abs(),
            tzjf,
        ));

        let k = rng.gen_range((e2.powf(gamma) / e1.powf(gamma)).min(1.0)..=1.0);
        if k > 0.0 {
            let pk = BoundParams::new(alpha, gamma, 0.0, k).unwrap();
            if let Ok(vk) = monogamy::tripartite_bound_with_ratio(e1, e2, &pk) {
                let kx = k.powf(x);
                let lsf = e1.powf(alpha)
                    + (((1.0 + k).powf(x) - 1.0) / kx + kx - e2.powf(alpha) / e1.powf(alpha))
                        * e2.powf(alpha);
                worst = worst.max(rel((vk - lsf).abs(), lsf));
            }
        }
        t.record(worst, || {
            format!("e1={e1} e2={e2} alpha={alpha} gamma={gamma} m={m}")
        });
    }
    SuiteResult::from_tracker("monogamy/specialization-ladder", 1e-12, t)
}

fn m_monotone(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for _ in 0..n {
        let gamma = if rng.gen_bool(0.5) { 2.0 } else { 1.0 };
        let k = rng.gen_range(0.2..1.0f64);
        let e1 = rng.gen_range(0.1..1.0f64);
        // strict regime: e2^gamma strictly below k e1^gamma
        let e2 = e1 * (k * rng.gen_range(0.05..0.95f64)).powf(1.0 / gamma);
        if e2 <= 1e-12 {
            continue;
        }
        let m_max = 6.0;
        let alpha = ineq::alpha_min(m_max, gamma) + rng.gen_range(0.0..6.0);
        let mut prev = f64::NEG_INFINITY;
        let mut worst = f64::NEG_INFINITY;
        for step in 0..=6 {
            let m = m_max * step as f64 / 6.0;
            let p = BoundParams::new(alpha, gamma, m, k).unwrap();
            let v = monogamy::tripartite_bound_with_ratio(e1, e2, &p).unwrap();
            if prev > f64::NEG_INFINITY {
                worst = worst.max(rel(prev - v, prev));
            }
            prev = v;
        }
        t.record(worst, || {
            format!("e1={e1} e2={e2} k={k} alpha={alpha} gamma={gamma}")
        });
    }
    SuiteResult::from_tracker("monogamy/m-monotone", 1e-12, t)
}

fn power_sum(seed: u64, n: u64) -> SuiteResult {
    let mut rng = SweepRng::seed_from_u64(seed);
    let mut t = Tracker::new();
    for _ in 0..n {
        let m = rng.gen_range(0.0..6.0);
        let x = admissible_x(&mut rng, m, 12.0);
        let len = rng.gen_range(2..=6usize);
        let mut p: Vec<f64> = (0..len).map(|_| rng.gen_range(0.01..3.0)).collect();
        p.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let bound = monogamy::power_sum_lower_bound(&p, x, m).unwrap();
        let total: f64 = p.iter().sum();
        let lhs = total.powf(x);
        t.record((bound - lhs) / lhs, || format!("p={p:?} x={x} m={m}"));
    }
    SuiteResult::from_tracker("monogamy/power-sum", 1e-9, t)
}

fn figure_orderings() -> SuiteResult {
    let mut t = Tracker::new();
    for (name, table) in [
        ("figure1", crate::cli::figure1_table()),
        ("figure2", crate::cli::figure2_table()),
        ("figure3", crate::cli::figure3_table()),
    ] {
        let table = match table {
            Ok(table) => table,
            Err(e) => {
                t.record(f64::INFINITY, || format!("{name} failed to build: {e}"));
                continue;
            }
        };
        t.record(table.max_ordering_violation(), || {
            format!("{name} ordering")
        });
        // first column must strictly dominate the second everywhere
        t.record(-table.min_first_gap(), || format!("{name} first-gap"));
    }
    SuiteResult::from_tracker("cli/figure-orderings", 1e-12, t)
}
