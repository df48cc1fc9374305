//! Lower bounds on the alpha-th power of a measure across the split
//! A | B_1..B_{N-1}, assembled from the scalar kernels in [`crate::ineq`].
//!
//! Every evaluator takes plain measure values (not powers) plus a
//! [`BoundParams`], checks the regime preconditions exactly as stated
//! (gamma-th powers, equality admitted at 1e-12), and rejects
//! degenerate inputs where a required-positive measure is below 1e-12.

use crate::error::{Error, Result};
use crate::ineq::{self, DOMAIN_TOL};

/// Measures this small are treated as zero: the bounds assume strictly
/// positive measures and their ratios become meaningless noise.
pub const DEGENERATE_TOL: f64 = 1e-12;

/// The tuple (alpha, gamma, m, k) governing every bound family.
///
/// Admissibility requires alpha >= (1 + log2(m + 2)) * gamma; k is the
/// side-information ratio, in (0, 1] for the case-1 evaluators and
/// >= 1 for case-2 kernels.
#[derive(Debug, Clone, Copy)]
pub struct BoundParams {
    pub alpha: f64,
    pub gamma: f64,
    pub m: f64,
    pub k: f64,
}

impl BoundParams {
    pub fn new(alpha: f64, gamma: f64, m: f64, k: f64) -> Result<Self> {
        if ![alpha, gamma, m, k].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidInput(
                "bound parameters must be finite".into(),
            ));
        }
        if gamma <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "gamma must be positive, got {gamma}"
            )));
        }
        if m < 0.0 {
            return Err(Error::InvalidInput(format!(
                "m must be nonnegative, got {m}"
            )));
        }
        if k <= 0.0 {
            return Err(Error::InvalidInput(format!("k must be positive, got {k}")));
        }
        let floor = ineq::alpha_min(m, gamma);
        if alpha < floor - DOMAIN_TOL {
            return Err(Error::InvalidInput(format!(
                "alpha = {alpha} below the admissible floor {floor} for m = {m}, gamma = {gamma}"
            )));
        }
        Ok(Self { alpha, gamma, m, k })
    }

    /// Exponent fed to the scalar kernels.
    pub fn x(&self) -> f64 {
        self.alpha / self.gamma
    }

    pub fn with_m(&self, m: f64) -> Result<Self> {
        Self::new(self.alpha, self.gamma, m, self.k)
    }

    pub fn with_k(&self, k: f64) -> Result<Self> {
        Self::new(self.alpha, self.gamma, self.m, k)
    }
}

fn check_positive(values: &[f64], what: &str) -> Result<()> {
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!("{what}[{i}] is not finite")));
        }
        if v <= DEGENERATE_TOL {
            return Err(Error::Degenerate(format!(
                "{what}[{i}] = {v} is not strictly positive"
            )));
        }
    }
    Ok(())
}

/// Tripartite lower bound on E(A|BC)^alpha without side information
/// (the k = 1 family):
/// e_ab^alpha + [2^(a/g) - (e_ac/e_ab)^alpha + (m a/g)((e_ab/e_ac)^g - 1)] e_ac^alpha,
/// valid when e_ab^gamma >= e_ac^gamma > 0.
pub fn tripartite_bound(e_ab: f64, e_ac: f64, p: &BoundParams) -> Result<f64> {
    check_positive(&[e_ab, e_ac], "measure")?;
    let g = p.gamma;
    if e_ab.powf(g) < e_ac.powf(g) - DOMAIN_TOL {
        return Err(Error::Precondition(format!(
            "needs e_ab^gamma >= e_ac^gamma, got {} < {}",
            e_ab.powf(g),
            e_ac.powf(g)
        )));
    }
    let x = p.x();
    let ratio_alpha = e_ac.powf(p.alpha) / e_ab.powf(p.alpha);
    let coeff = 2f64.powf(x) - ratio_alpha + p.m * x * ((e_ab / e_ac).powf(g) - 1.0);
    Ok(e_ab.powf(p.alpha) + coeff * e_ac.powf(p.alpha))
}

/// Tripartite lower bound that exploits a known ratio bound
/// k e_ab^gamma >= e_ac^gamma with 0 < k <= 1:
/// e_ab^a + [((1+k)^(a/g) - 1)/k^(a/g) + k^(a/g) - (e_ac/e_ab)^a
///           + (m a/g)((e_ab/e_ac)^g - 1/k)] e_ac^a.
pub fn tripartite_bound_with_ratio(e_ab: f64, e_ac: f64, p: &BoundParams) -> Result<f64> {
    check_positive(&[e_ab, e_ac], "measure")?;
    if p.k > 1.0 + DOMAIN_TOL {
        return Err(Error::Precondition(format!(
            "ratio bound needs 0 < k <= 1, got k = {}",
            p.k
        )));
    }
    let g = p.gamma;
    if p.k * e_ab.powf(g) < e_ac.powf(g) - DOMAIN_TOL {
        return Err(Error::Precondition(format!(
            "needs k e_ab^gamma >= e_ac^gamma, got {} < {}",
            p.k * e_ab.powf(g),
            e_ac.powf(g)
        )));
    }
    let x = p.x();
    let kx = p.k.powf(x);
    let coeff = ((1.0 + p.k).powf(x) - 1.0) / kx + kx - e_ac.powf(p.alpha) / e_ab.powf(p.alpha)
        + p.m * x * ((e_ab / e_ac).powf(g) - 1.0 / p.k);
    Ok(e_ab.powf(p.alpha) + coeff * e_ac.powf(p.alpha))
}

/// Pairwise measures e_1..e_{N-1} together with the tail measures
/// tail_i = E(A | B_{i+1}..B_{N-1}) for i = 1..N-2 and the split index
/// n separating the two regimes of the N-partite bound.
#[derive(Debug, Clone)]
pub struct PartitionedMeasures {
    pairwise: Vec<f64>,
    tails: Vec<f64>,
    split: usize,
}

impl PartitionedMeasures {
    pub fn new(pairwise: Vec<f64>, tails: Vec<f64>, split: usize) -> Result<Self> {
        let n_parties = pairwise.len() + 1; // N
        if n_parties < 4 {
            return Err(Error::InvalidInput(format!(
                "split bound needs N >= 4 parties, got N = {n_parties}"
            )));
        }
        if tails.len() != pairwise.len() - 1 {
            return Err(Error::DimensionMismatch(format!(
                "expected {} tail measures for {} pairwise, got {}",
                pairwise.len() - 1,
                pairwise.len(),
                tails.len()
            )));
        }
        if split < 1 || split > n_parties - 3 {
            return Err(Error::InvalidInput(format!(
                "split n = {split} outside 1..={} for N = {n_parties}",
                n_parties - 3
            )));
        }
        Ok(Self {
            pairwise,
            tails,
            split,
        })
    }

    pub fn pairwise(&self) -> &[f64] {
        &self.pairwise
    }

    pub fn tails(&self) -> &[f64] {
        &self.tails
    }

    pub fn split(&self) -> usize {
        self.split
    }
}

fn coeff_m(x: f64, k: f64) -> f64 {
    ((1.0 + k).powf(x) - 1.0) / k.powf(x) + k.powf(x)
}

/// N-partite lower bound in the mixed regime: subsystems 1..n obey
/// k e_i^gamma >= tail_i^gamma and subsystems n+1..N-2 the reverse
/// scaled inequality e_j^gamma <= k tail_j^gamma.
#[allow(clippy::needless_range_loop)] // 1-based indexing mirrors the bound definition
pub fn multipartite_split_bound(pm: &PartitionedMeasures, p: &BoundParams) -> Result<f64> {
    check_positive(&pm.pairwise, "pairwise")?;
    check_positive(&pm.tails, "tail")?;
    if p.k > 1.0 + DOMAIN_TOL {
        return Err(Error::Precondition(format!(
            "split bound needs 0 < k <= 1, got k = {}",
            p.k
        )));
    }
    let g = p.gamma;
    let n = pm.split;
    let e = &pm.pairwise;
    let tails = &pm.tails;
    let n_parties = e.len() + 1;

    for i in 1..=n {
        if p.k * e[i - 1].powf(g) < tails[i - 1].powf(g) - DOMAIN_TOL {
            return Err(Error::Precondition(format!(
                "regime condition k e[{i}]^gamma >= tail[{i}]^gamma fails: {} < {}",
                p.k * e[i - 1].powf(g),
                tails[i - 1].powf(g)
            )));
        }
    }
    for j in (n + 1)..=(n_parties - 2) {
        if e[j - 1].powf(g) > p.k * tails[j - 1].powf(g) + DOMAIN_TOL {
            return Err(Error::Precondition(format!(
                "regime condition e[{j}]^gamma <= k tail[{j}]^gamma fails: {} > {}",
                e[j - 1].powf(g),
                p.k * tails[j - 1].powf(g)
            )));
        }
    }

    let x = p.x();
    let big_m = coeff_m(x, p.k);
    let factor = |i: usize| -> f64 {
        // M_i + T_i for the leading regime, 1-based i.
        let mi = big_m - (tails[i - 1] / e[i - 1]).powf(p.alpha);
        let ti = p.m * x * ((e[i - 1] / tails[i - 1]).powf(g) - 1.0 / p.k);
        mi + ti
    };

    let mut value = e[0].powf(p.alpha);
    let mut product = 1.0;
    for i in 1..=(n - 1) {
        product *= factor(i);
        value += product * e[i].powf(p.alpha); // e_{i+1} in 1-based terms
    }
    product *= factor(n);

    let mut inner = e[n_parties - 2].powf(p.alpha); // e_{N-1}
    for j in (n + 1)..=(n_parties - 2) {
        let qj = big_m - (e[j - 1] / tails[j - 1]).powf(p.alpha);
        let pj = p.m * x * ((tails[j - 1] / e[j - 1]).powf(g) - 1.0 / p.k);
        inner += (qj + pj) * e[j - 1].powf(p.alpha);
    }
    Ok(value + product * inner)
}

/// N-partite cascade bound when every subsystem sits in the leading
/// regime k e_i^gamma >= tail_i^gamma (i = 1..N-2):
/// e_1^a + sum_i (prod_{j<=i} (M_j + T_j)) e_{i+1}^a.
pub fn multipartite_cascade_bound(pairwise: &[f64], tails: &[f64], p: &BoundParams) -> Result<f64> {
    if pairwise.len() < 2 {
        return Err(Error::InvalidInput(
            "cascade bound needs at least two pairwise measures".into(),
        ));
    }
    if tails.len() != pairwise.len() - 1 {
        return Err(Error::DimensionMismatch(format!(
            "expected {} tail measures, got {}",
            pairwise.len() - 1,
            tails.len()
        )));
    }
    check_positive(pairwise, "pairwise")?;
    check_positive(tails, "tail")?;
    if p.k > 1.0 + DOMAIN_TOL {
        return Err(Error::Precondition(format!(
            "cascade bound needs 0 < k <= 1, got k = {}",
            p.k
        )));
    }
    let g = p.gamma;
    for i in 1..=tails.len() {
        if p.k * pairwise[i - 1].powf(g) < tails[i - 1].powf(g) - DOMAIN_TOL {
            return Err(Error::Precondition(format!(
                "regime condition k e[{i}]^gamma >= tail[{i}]^gamma fails: {} < {}",
                p.k * pairwise[i - 1].powf(g),
                tails[i - 1].powf(g)
            )));
        }
    }
    let x = p.x();
    let big_m = coeff_m(x, p.k);
    let mut value = pairwise[0].powf(p.alpha);
    let mut product = 1.0;
    for i in 1..pairwise.len() {
        let mi = big_m - (tails[i - 1] / pairwise[i - 1]).powf(p.alpha);
        let ti = p.m * x * ((pairwise[i - 1] / tails[i - 1]).powf(g) - 1.0 / p.k);
        product *= mi + ti;
        value += product * pairwise[i].powf(p.alpha);
    }
    Ok(value)
}

/// Scalar lower bound on (p_1 + ... + p_N)^x for descending positive
/// p_i:
/// p_1^x + sum_{i>=2} [i^x - (i-1)^x + (i-1)^(-x) - s_i^(-x)
///                     + m x (s_i - (i-1))] p_i^x,
/// where s_i = (p_1 + .. + p_{i-1}) / p_i.
pub fn power_sum_lower_bound(pvals: &[f64], x: f64, m: f64) -> Result<f64> {
    if pvals.is_empty() {
        return Err(Error::InvalidInput("need at least one value".into()));
    }
    for (i, &v) in pvals.iter().enumerate() {
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::Precondition(format!(
                "p[{i}] = {v} must be strictly positive"
            )));
        }
    }
    for (i, w) in pvals.windows(2).enumerate() {
        if w[1] > w[0] + DOMAIN_TOL {
            return Err(Error::Precondition(format!(
                "values must be descending: p[{i}] = {} < p[{}] = {}",
                w[0],
                i + 1,
                w[1]
            )));
        }
    }
    if m < 0.0 {
        return Err(Error::InvalidInput(format!(
            "m must be nonnegative, got {m}"
        )));
    }
    let floor = 1.0 + (m + 2.0).log2();
    if x < floor - DOMAIN_TOL {
        return Err(Error::InvalidInput(format!(
            "x = {x} below the admissible floor {floor}"
        )));
    }

    let mut value = pvals[0].powf(x);
    let mut prefix = pvals[0];
    for (idx, &pi) in pvals.iter().enumerate().skip(1) {
        let i = (idx + 1) as f64;
        let s = prefix / pi;
        let coeff = i.powf(x) - (i - 1.0).powf(x) + (i - 1.0).powf(-x) - s.powf(-x)
            + m * x * (s - (i - 1.0));
        value += coeff * pi.powf(x);
        prefix += pi;
    }
    Ok(value)
}

fn check_descending_powers(e: &[f64], gamma: f64) -> Result<()> {
    for (i, w) in e.windows(2).enumerate() {
        if w[1].powf(gamma) > w[0].powf(gamma) + DOMAIN_TOL {
            return Err(Error::Precondition(format!(
                "measures must be descending: e[{i}]^gamma = {} < e[{}]^gamma = {}",
                w[0].powf(gamma),
                i + 1,
                w[1].powf(gamma)
            )));
        }
    }
    Ok(())
}

/// Descending-order bound using only pairwise measures, sorted so that
/// e_1^gamma >= ... >= e_{N-1}^gamma > 0:
/// e_1^a + sum_{i>=2} [i^x - (i-1)^x + (i-1)^(-x) - tau_i^(-x)
///                     + m x (tau_i - (i-1))] e_i^a,
/// with x = alpha/gamma and tau_i = (e_1^g + .. + e_{i-1}^g) / e_i^g.
pub fn descending_order_bound(e: &[f64], p: &BoundParams) -> Result<f64> {
    if e.is_empty() {
        return Err(Error::InvalidInput("need at least one measure".into()));
    }
    check_positive(e, "measure")?;
    check_descending_powers(e, p.gamma)?;
    let x = p.x();
    let g = p.gamma;
    let mut value = e[0].powf(p.alpha);
    let mut prefix = e[0].powf(g);
    for (idx, &ei) in e.iter().enumerate().skip(1) {
        let i = (idx + 1) as f64;
        let tau = prefix / ei.powf(g);
        let coeff = i.powf(x) - (i - 1.0).powf(x) + (i - 1.0).powf(-x) - tau.powf(-x)
            + p.m * x * (tau - (i - 1.0));
        value += coeff * ei.powf(p.alpha);
        prefix += ei.powf(g);
    }
    Ok(value)
}

/// The five nested relaxations of the descending-order bound,
/// tightest first.
#[derive(Debug, Clone, Copy)]
pub struct DescendingChain {
    /// Full m-parameterized bound.
    pub full: f64,
    /// m = 0 specialization, correction term retained.
    pub m_zero: f64,
    /// Drops the (i-1)^(-x) - tau_i^(-x) correction.
    pub no_correction: f64,
    /// Uniform coefficient 2^x - 1.
    pub two_power: f64,
    /// Plain power sum.
    pub plain: f64,
}

impl DescendingChain {
    pub fn as_array(&self) -> [f64; 5] {
        [
            self.full,
            self.m_zero,
            self.no_correction,
            self.two_power,
            self.plain,
        ]
    }
}

pub fn descending_order_chain(e: &[f64], p: &BoundParams) -> Result<DescendingChain> {
    let full = descending_order_bound(e, p)?;
    let m_zero = descending_order_bound(e, &p.with_m(0.0)?)?;
    let x = p.x();
    let head = e[0].powf(p.alpha);
    let mut no_correction = head;
    let mut two_power = head;
    let mut plain = head;
    for (idx, &ei) in e.iter().enumerate().skip(1) {
        let i = (idx + 1) as f64;
        let ea = ei.powf(p.alpha);
        no_correction += (i.powf(x) - (i - 1.0).powf(x)) * ea;
        two_power += (2f64.powf(x) - 1.0) * ea;
        plain += ea;
    }
    Ok(DescendingChain {
        full,
        m_zero,
        no_correction,
        two_power,
        plain,
    })
}

/// Simple descending bound e_1^a + sum_{i>=2} [i^a - (i-1)^a] e_i^a for
/// alpha >= 1, stated directly on measure values (gamma = 1 regime).
pub fn ordered_power_bound(e: &[f64], alpha: f64) -> Result<f64> {
    if e.is_empty() {
        return Err(Error::InvalidInput("need at least one measure".into()));
    }
    if alpha < 1.0 - DOMAIN_TOL {
        return Err(Error::InvalidInput(format!(
            "alpha must be at least 1, got {alpha}"
        )));
    }
    for (i, &v) in e.iter().enumerate() {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::InvalidInput(format!(
                "measure[{i}] = {v} must be nonnegative"
            )));
        }
    }
    for (i, w) in e.windows(2).enumerate() {
        if w[1] > w[0] + DOMAIN_TOL {
            return Err(Error::Precondition(format!(
                "measures must be descending: e[{i}] = {} < e[{}] = {}",
                w[0],
                i + 1,
                w[1]
            )));
        }
    }
    let mut value = e[0].powf(alpha);
    for (idx, &ei) in e.iter().enumerate().skip(1) {
        let i = (idx + 1) as f64;
        value += (i.powf(alpha) - (i - 1.0).powf(alpha)) * ei.powf(alpha);
    }
    Ok(value)
}

/// Per-alpha rows of named bound values, used for the comparison
/// tables and their ordering regression.
#[derive(Debug, Clone)]
pub struct CurveTable {
    pub alphas: Vec<f64>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl CurveTable {
    /// Render as CSV: header `alpha,<columns>`, 17 significant digits,
    /// `.` decimal separator, LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("alpha");
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (alpha, row) in self.alphas.iter().zip(&self.rows) {
            out.push_str(&format!("{:.16e}", alpha));
            for v in row {
                out.push(',');
                out.push_str(&format!("{:.16e}", v));
            }
            out.push('\n');
        }
        out
    }

    /// Worst violation of the documented left-to-right descending
    /// order; nonpositive when every row is properly ordered.
    pub fn max_ordering_violation(&self) -> f64 {
        let mut worst = f64::NEG_INFINITY;
        for row in &self.rows {
            for w in row.windows(2) {
                worst = worst.max(w[1] - w[0]);
            }
        }
        worst
    }

    /// Smallest gap between the first and second column across rows.
    pub fn min_first_gap(&self) -> f64 {
        self.alphas
            .iter()
            .zip(&self.rows)
            .map(|(_, row)| row[0] - row[1])
            .fold(f64::INFINITY, f64::min)
    }
}
