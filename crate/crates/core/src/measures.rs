//! Bipartite entanglement measures: concurrence (pure splits and
//! two-qubit mixed states), convex-roof extended negativity, and the
//! Bures measure.
//!
//! Conventions, chosen so that all worked-example values reproduce
//! exactly:
//!   * concurrence of a pure qubit-vs-rest split is
//!     sqrt(2 (1 - tr rho_A^2));
//!   * CREN equals the Wootters concurrence on two-qubit states and
//!     the negativity |rho^{T_A}|_1 - 1 on pure qubit-vs-rest splits;
//!   * the Bures measure of a two-qubit state is B(C) with
//!     B(x) = 2 - 2 sqrt((1 + sqrt(1 - x^2)) / 2).

use crate::cmatrix::{Complex64, ComplexMatrix};
use crate::error::{Error, Result};
use crate::qstate::PureState;

/// Largest value of 2 - 2 sqrt((1 + sqrt(1-x^2))/2) on [0, 1].
pub const BURES_MAX: f64 = 2.0 - std::f64::consts::SQRT_2;

/// The measures compared in this crate, each carrying the power gamma
/// of its monogamy relation: 2 for concurrence and CREN, 1 for Bures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    Concurrence,
    Cren,
    Bures,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 3] = [
        MeasureKind::Concurrence,
        MeasureKind::Cren,
        MeasureKind::Bures,
    ];

    pub fn gamma(self) -> f64 {
        match self {
            MeasureKind::Concurrence | MeasureKind::Cren => 2.0,
            MeasureKind::Bures => 1.0,
        }
    }

    /// Short label used in report keys: C, Nc, EB.
    pub fn label(self) -> &'static str {
        match self {
            MeasureKind::Concurrence => "C",
            MeasureKind::Cren => "Nc",
            MeasureKind::Bures => "EB",
        }
    }
}

fn require_qubit(s: &PureState, party: usize) -> Result<()> {
    if party >= s.n_subsystems() {
        return Err(Error::InvalidInput(format!(
            "party index {party} out of range for {} subsystems",
            s.n_subsystems()
        )));
    }
    if s.dims()[party] != 2 {
        return Err(Error::InvalidInput(format!(
            "party {party} has dimension {}, expected a qubit",
            s.dims()[party]
        )));
    }
    Ok(())
}

/// Concurrence of the pure split party-vs-rest: sqrt(2 (1 - tr rho_A^2)).
pub fn concurrence_pure(s: &PureState, party_a: usize) -> Result<f64> {
    require_qubit(s, party_a)?;
    let rho_a = s.reduced(&[party_a])?;
    let purity = rho_a.matmul(&rho_a)?.trace().re;
    Ok((2.0 * (1.0 - purity)).max(0.0).sqrt().min(1.0))
}

/// Wootters concurrence of a two-qubit density matrix:
/// max(0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4)) over the
/// descending eigenvalues mu_i of R = sqrt(rho) rho~ sqrt(rho), where
/// rho~ = (sy (x) sy) conj(rho) (sy (x) sy).
///
/// The roots sqrt(mu_i) are computed as the singular values of
/// B = sqrt(rho) (sy (x) sy) sqrt(rho)^T, which satisfies B B^H = R.
/// Solving R itself would square away roots near zero (an eigenvalue
/// at the rounding floor of R surfaces as a 1e-8-sized root), while
/// the singular values of B carry absolute errors at machine epsilon.
pub fn wootters_concurrence(rho: &ComplexMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "Wootters concurrence needs a 4x4 density matrix, got {}x{}",
            rho.dim(),
            rho.dim()
        )));
    }
    rho.check_density()?;

    // sy (x) sy is real: antidiagonal (-1, 1, 1, -1).
    let mut yy = ComplexMatrix::zeros(4);
    yy.set(0, 3, Complex64::new(-1.0, 0.0));
    yy.set(1, 2, Complex64::new(1.0, 0.0));
    yy.set(2, 1, Complex64::new(1.0, 0.0));
    yy.set(3, 0, Complex64::new(-1.0, 0.0));

    let root = rho.sqrt_psd()?;
    // sqrt(rho)^T = conj(sqrt(rho)) since the root is Hermitian.
    let b = root.matmul(&yy)?.matmul(&root.conj())?;
    let sv = singular_values_descending(&b)?;
    let c = sv[0] - sv[1] - sv[2] - sv[3];
    Ok(c.clamp(0.0, 1.0))
}

/// Singular values in descending order by one-sided Jacobi: columns
/// are rotated pairwise until mutually orthogonal, then their norms
/// are the singular values. The Gram matrix is never formed in full,
/// so tiny singular values are not squared into the rounding floor.
fn singular_values_descending(b: &ComplexMatrix) -> Result<Vec<f64>> {
    let n = b.dim();
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| b.get(i, j)).collect())
        .collect();
    let mut converged = false;
    for _ in 0..100 {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut hpp = 0.0;
                let mut hqq = 0.0;
                let mut hpq = Complex64::new(0.0, 0.0);
                for i in 0..n {
                    hpp += cols[p][i].norm_sqr();
                    hqq += cols[q][i].norm_sqr();
                    hpq += cols[p][i].conj() * cols[q][i];
                }
                let abs = hpq.norm();
                if abs <= 1e-15 * (hpp * hqq).sqrt() {
                    continue;
                }
                let phase = hpq / abs;
                let tau = (hqq - hpp) / (2.0 * abs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    let bip = cols[p][i];
                    let biq = cols[q][i];
                    cols[p][i] = bip * c - biq * s * phase.conj();
                    cols[q][i] = bip * s * phase + biq * c;
                }
                rotated = true;
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numerical(
            "singular-value sweep did not converge in 100 passes".into(),
        ));
    }
    let mut sv: Vec<f64> = cols
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(sv)
}

/// Convex-roof extended negativity of a two-qubit state. On two qubits
/// this coincides with the Wootters concurrence.
pub fn cren_two_qubit(rho: &ComplexMatrix) -> Result<f64> {
    wootters_concurrence(rho)
}

/// Negativity |rho^{T_A}|_1 - 1 of the pure split party-vs-rest,
/// computed from the full density matrix. For a qubit against the rest
/// this equals the pure-split concurrence.
pub fn negativity_pure(s: &PureState, party_a: usize) -> Result<f64> {
    require_qubit(s, party_a)?;
    let rho = s.density();
    let pt = rho.partial_transpose(s.dims(), party_a)?;
    let norm = pt.trace_norm_hermitian()?;
    Ok((norm - 1.0).max(0.0))
}

/// Bures measure as a function of the concurrence:
/// B(c) = 2 - 2 sqrt((1 + sqrt(1 - c^2)) / 2), increasing on [0, 1].
/// Inputs outside [0, 1] by more than 1e-12 are rejected; values inside
/// the tolerance band are clamped.
pub fn bures_from_concurrence(c: f64) -> Result<f64> {
    if !c.is_finite() || !(-1e-12..=1.0 + 1e-12).contains(&c) {
        return Err(Error::InvalidInput(format!(
            "concurrence {c} outside [0, 1]"
        )));
    }
    let c = c.clamp(0.0, 1.0);
    Ok(2.0 - 2.0 * ((1.0 + (1.0 - c * c).sqrt()) / 2.0).sqrt())
}

/// Unified dispatch: `party_b = None` means the split of `party_a`
/// against everything else; `Some(b)` means the reduced pair (a, b).
pub fn measure(
    kind: MeasureKind,
    s: &PureState,
    party_a: usize,
    party_b: Option<usize>,
) -> Result<f64> {
    match party_b {
        None => match kind {
            MeasureKind::Concurrence => concurrence_pure(s, party_a),
            MeasureKind::Cren => negativity_pure(s, party_a),
            MeasureKind::Bures => bures_from_concurrence(concurrence_pure(s, party_a)?),
        },
        Some(b) => {
            require_qubit(s, party_a)?;
            require_qubit(s, b)?;
            if b == party_a {
                return Err(Error::InvalidInput(
                    "pair measure needs two distinct parties".into(),
                ));
            }
            let keep = if party_a < b {
                [party_a, b]
            } else {
                [b, party_a]
            };
            let rho = s.reduced(&keep)?;
            match kind {
                MeasureKind::Concurrence => wootters_concurrence(&rho),
                MeasureKind::Cren => cren_two_qubit(&rho),
                MeasureKind::Bures => bures_from_concurrence(wootters_concurrence(&rho)?),
            }
        }
    }
}
