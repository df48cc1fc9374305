//! Dense complex linear algebra for small density matrices.
//!
//! Everything here targets Hilbert-space dimensions of at most a few
//! qubits (dim <= 16), so the implementations favour robustness over
//! asymptotic speed: plain triple loops for products and a cyclic
//! Jacobi sweep for Hermitian eigendecomposition.

use crate::error::{Error, Result};

pub type Complex64 = num_complex::Complex<f64>;

/// Tolerance for Hermiticity and trace checks.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues of nominally PSD matrices may dip this far below zero
/// before the matrix is rejected; anything in (-EIG_CLAMP_TOL, 0) is
/// clamped to zero.
pub const EIG_CLAMP_TOL: f64 = 1e-10;

// Convergence target for the Jacobi sweep, relative to the matrix
// scale. Well below the 1e-12 contract: eigenvalue errors propagate
// into square roots as err / (2 sqrt(mu)), so small eigenvalues need
// the off-diagonal norm driven to the rounding floor.
const JACOBI_OFF_TOL: f64 = 4e-15;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Dense square matrix of complex doubles, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build a matrix from row-major entries. Rejects non-square data
    /// and non-finite components.
    pub fn new(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput(
                "matrix dimension must be positive".into(),
            ));
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput("matrix entries must be finite".into()));
        }
        Ok(Self { dim, data })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let dim = diag.len();
        let mut m = Self::zeros(dim);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * dim + i] = Complex64::new(d, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "add: {} vs {}",
                self.dim, other.dim
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            dim: self.dim,
            data,
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "matmul: {} vs {}",
                self.dim, other.dim
            )));
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.re == 0.0 && aik.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += aik * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.get(i, j).conj();
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest deviation from Hermiticity, max_{ij} |a_ij - conj(a_ji)|.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..=i {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    fn require_hermitian(&self) -> Result<()> {
        let deviation = self.hermiticity_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(())
    }

    /// Checks the density-matrix contract: Hermitian, unit trace, and
    /// no eigenvalue below -EIG_CLAMP_TOL.
    pub fn check_density(&self) -> Result<()> {
        self.require_hermitian()?;
        let tr = self.trace();
        if (tr.re - 1.0).abs() > HERMITIAN_TOL || tr.im.abs() > HERMITIAN_TOL {
            return Err(Error::InvalidInput(format!(
                "density matrix trace is {tr}, expected 1"
            )));
        }
        let (eigs, _) = self.hermitian_eig()?;
        let min_eigenvalue = eigs[0];
        if min_eigenvalue < -EIG_CLAMP_TOL {
            return Err(Error::NotPsd { min_eigenvalue });
        }
        Ok(())
    }

    /// Kronecker product; index (i*db + k, j*db + l) carries a_ij * b_kl.
    pub fn kron(&self, other: &Self) -> Self {
        let (da, db) = (self.dim, other.dim);
        let n = da * db;
        let mut out = Self::zeros(n);
        for i in 0..da {
            for j in 0..da {
                let aij = self.get(i, j);
                if aij.re == 0.0 && aij.im == 0.0 {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        out.data[(i * db + k) * n + (j * db + l)] = aij * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    /// Trace out every subsystem not listed in `keep`.
    ///
    /// `dims` lists the subsystem dimensions in lexicographic basis
    /// order (subsystem 0 is the most significant index). `keep` must
    /// be strictly increasing; the kept subsystems retain that order.
    pub fn partial_trace(&self, dims: &[usize], keep: &[usize]) -> Result<Self> {
        let total: usize = dims.iter().product();
        if total != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subsystem dims {:?} multiply to {total}, matrix dim is {}",
                dims, self.dim
            )));
        }
        if keep.is_empty() {
            return Err(Error::InvalidInput("keep set must be nonempty".into()));
        }
        if keep.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "keep indices must be strictly increasing".into(),
            ));
        }
        if *keep.last().unwrap() >= dims.len() {
            return Err(Error::InvalidInput(format!(
                "keep index {} out of range for {} subsystems",
                keep.last().unwrap(),
                dims.len()
            )));
        }

        let traced: Vec<usize> = (0..dims.len()).filter(|s| !keep.contains(s)).collect();
        let keep_dim: usize = keep.iter().map(|&s| dims[s]).product();
        let traced_dim: usize = traced.iter().map(|&s| dims[s]).product();

        // Strides of each subsystem in the full index.
        let mut stride = vec![1usize; dims.len()];
        for s in (0..dims.len().saturating_sub(1)).rev() {
            stride[s] = stride[s + 1] * dims[s + 1];
        }

        // full index of a (kept multi-index, traced multi-index) pair
        let compose = |kept_code: usize, traced_code: usize| -> usize {
            let mut idx = 0;
            let mut rem = kept_code;
            for &s in keep.iter().rev() {
                idx += (rem % dims[s]) * stride[s];
                rem /= dims[s];
            }
            let mut rem = traced_code;
            for &s in traced.iter().rev() {
                idx += (rem % dims[s]) * stride[s];
                rem /= dims[s];
            }
            idx
        };

        let mut out = Self::zeros(keep_dim);
        for i in 0..keep_dim {
            for j in 0..keep_dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for t in 0..traced_dim {
                    acc += self.get(compose(i, t), compose(j, t));
                }
                out.data[i * keep_dim + j] = acc;
            }
        }
        Ok(out)
    }

    /// Partial transpose with respect to one subsystem.
    pub fn partial_transpose(&self, dims: &[usize], subsystem: usize) -> Result<Self> {
        let total: usize = dims.iter().product();
        if total != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subsystem dims {:?} multiply to {total}, matrix dim is {}",
                dims, self.dim
            )));
        }
        if subsystem >= dims.len() {
            return Err(Error::InvalidInput(format!(
                "subsystem {subsystem} out of range for {} subsystems",
                dims.len()
            )));
        }
        let mut stride = vec![1usize; dims.len()];
        for s in (0..dims.len().saturating_sub(1)).rev() {
            stride[s] = stride[s + 1] * dims[s + 1];
        }
        let d = dims[subsystem];
        let st = stride[subsystem];
        let digit = |idx: usize| (idx / st) % d;

        let mut out = Self::zeros(self.dim);
        for row in 0..self.dim {
            for col in 0..self.dim {
                let (r, c) = (digit(row), digit(col));
                let row2 = row - r * st + c * st;
                let col2 = col - c * st + r * st;
                out.data[row2 * self.dim + col2] = self.get(row, col);
            }
        }
        Ok(out)
    }

    /// Eigendecomposition of a Hermitian matrix by cyclic Jacobi
    /// rotations. Returns eigenvalues in ascending order and the
    /// matching eigenvectors as columns.
    ///
    /// Sweeps run until the off-diagonal Frobenius norm reaches the
    /// rounding floor (far inside the 1e-12 contract), at most 100
    /// sweeps.
    pub fn hermitian_eig(&self) -> Result<(Vec<f64>, ComplexMatrix)> {
        self.require_hermitian()?;
        let n = self.dim;
        let mut a = self.clone();
        // Exact symmetrisation so rounding in the input cannot leak
        // into the iteration.
        for i in 0..n {
            for j in 0..i {
                let avg = (a.get(i, j) + a.get(j, i).conj()) * 0.5;
                a.set(i, j, avg);
                a.set(j, i, avg.conj());
            }
            let d = a.get(i, i);
            a.set(i, i, Complex64::new(d.re, 0.0));
        }
        let mut v = ComplexMatrix::identity(n);
        let scale = a.frobenius_norm().max(1.0);

        let off_norm = |a: &ComplexMatrix| {
            let mut off = 0.0f64;
            for i in 0..n {
                for j in (i + 1)..n {
                    off += 2.0 * a.get(i, j).norm_sqr();
                }
            }
            off.sqrt()
        };

        let mut converged = false;
        let mut prev_off = f64::INFINITY;
        for _ in 0..JACOBI_MAX_SWEEPS {
            let off = off_norm(&a);
            if off <= JACOBI_OFF_TOL * scale {
                converged = true;
                break;
            }
            // Rounding floor: a sweep that no longer halves the
            // off-diagonal norm cannot improve the result further.
            if off <= 1e-12 * scale && off > prev_off * 0.5 {
                converged = true;
                break;
            }
            prev_off = off;
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a.get(p, q);
                    let abs_apq = apq.norm();
                    if abs_apq == 0.0 {
                        continue;
                    }
                    let app = a.get(p, p).re;
                    let aqq = a.get(q, q).re;
                    // Phase of the pivot and the real rotation angle.
                    let phase = apq / abs_apq;
                    let tau = (aqq - app) / (2.0 * abs_apq);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + (1.0 + tau * tau).sqrt())
                    } else {
                        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;

                    // Update rows/columns p and q of A = J^H A J where
                    // J[p][p]=c, J[p][q]=s*phase, J[q][p]=-s*conj(phase), J[q][q]=c.
                    for k in 0..n {
                        if k == p || k == q {
                            continue;
                        }
                        let akp = a.get(k, p);
                        let akq = a.get(k, q);
                        let new_kp = akp * c - akq * s * phase.conj();
                        let new_kq = akp * s * phase + akq * c;
                        a.set(k, p, new_kp);
                        a.set(p, k, new_kp.conj());
                        a.set(k, q, new_kq);
                        a.set(q, k, new_kq.conj());
                    }
                    a.set(p, p, Complex64::new(app - t * abs_apq, 0.0));
                    a.set(q, q, Complex64::new(aqq + t * abs_apq, 0.0));
                    a.set(p, q, Complex64::new(0.0, 0.0));
                    a.set(q, p, Complex64::new(0.0, 0.0));

                    for k in 0..n {
                        let vkp = v.get(k, p);
                        let vkq = v.get(k, q);
                        v.set(k, p, vkp * c - vkq * s * phase.conj());
                        v.set(k, q, vkp * s * phase + vkq * c);
                    }
                }
            }
        }
        if !converged {
            // The last sweep may have finished the job; re-check
            // against the 1e-12 contract before giving up.
            let off = off_norm(&a);
            if off > 1e-12 * scale {
                return Err(Error::Numerical(format!(
                    "Jacobi eigensolver did not converge in {JACOBI_MAX_SWEEPS} sweeps \
                     (off-diagonal norm {off:.3e})"
                )));
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
        order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
        let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
        let mut vectors = ComplexMatrix::zeros(n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..n {
                vectors.set(row, new_col, v.get(row, old_col));
            }
        }
        Ok((eigenvalues, vectors))
    }

    /// Hermitian PSD square root via eigendecomposition. Eigenvalues
    /// in (-EIG_CLAMP_TOL, 0) are treated as round-off and clamped;
    /// positives at the rounding floor of the spectrum are flushed to
    /// zero as well, so exact null directions stay exactly null
    /// instead of leaking sqrt(eps)-sized components into the root.
    pub fn sqrt_psd(&self) -> Result<Self> {
        let (eigs, v) = self.hermitian_eig()?;
        if eigs[0] < -EIG_CLAMP_TOL {
            return Err(Error::NotPsd {
                min_eigenvalue: eigs[0],
            });
        }
        let n = self.dim;
        let floor = eigs[n - 1].max(0.0) * 32.0 * f64::EPSILON;
        let mut out = Self::zeros(n);
        for (idx, &mu) in eigs.iter().enumerate() {
            if mu <= floor {
                continue;
            }
            let root = mu.sqrt();
            for i in 0..n {
                let vi = v.get(i, idx);
                for j in 0..n {
                    out.data[i * n + j] += vi * v.get(j, idx).conj() * root;
                }
            }
        }
        Ok(out)
    }

    /// Trace norm (sum of absolute eigenvalues) of a Hermitian matrix.
    pub fn trace_norm_hermitian(&self) -> Result<f64> {
        let (eigs, _) = self.hermitian_eig()?;
        Ok(eigs.iter().map(|m| m.abs()).sum())
    }
}
