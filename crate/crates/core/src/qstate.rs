//! Multi-qubit pure states: the canonical three-qubit family used in
//! the worked comparisons, arbitrary amplitude vectors, seeded random
//! states, and reduced density matrices.
//!
//! Subsystem 0 is party A throughout; parties B_1..B_{N-1} are the
//! remaining indices in order. Basis states are enumerated
//! lexicographically with subsystem 0 as the most significant digit.

use crate::cmatrix::{Complex64, ComplexMatrix};
use crate::error::{Error, Result};
use rand::SeedableRng;
use rand_distr::{Distribution, StandardNormal};
use serde::Deserialize;

/// Reproducible generator used for every random sweep in this crate:
/// ChaCha8, seeded directly from a `u64`, so runs replay bit-identically.
pub type SweepRng = rand_chacha::ChaCha8Rng;

const NORM_TOL: f64 = 1e-12;

/// Normalized pure state over an ordered list of subsystems.
#[derive(Debug, Clone)]
pub struct PureState {
    dims: Vec<usize>,
    amps: Vec<Complex64>,
}

impl PureState {
    pub fn new(dims: Vec<usize>, amps: Vec<Complex64>) -> Result<Self> {
        if dims.is_empty() || dims.iter().any(|&d| d < 2) {
            return Err(Error::InvalidInput(
                "every subsystem dimension must be at least 2".into(),
            ));
        }
        let total: usize = dims.iter().product();
        if amps.len() != total {
            return Err(Error::DimensionMismatch(format!(
                "expected {} amplitudes for dims {:?}, got {}",
                total,
                dims,
                amps.len()
            )));
        }
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput("amplitudes must be finite".into()));
        }
        let norm2: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidInput(format!(
                "state is not normalized: sum |amp|^2 = {norm2}"
            )));
        }
        Ok(Self { dims, amps })
    }

    /// Parse the state-file format: `{"dims":[2,2,2],"amps":[[re,im],...]}`
    /// with amplitudes in lexicographic basis order.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct StateFile {
            dims: Vec<usize>,
            amps: Vec<[f64; 2]>,
        }
        let parsed: StateFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("state file: {e}")))?;
        let amps = parsed
            .amps
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        Self::new(parsed.dims, amps)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn n_subsystems(&self) -> usize {
        self.dims.len()
    }

    /// Rank-1 density matrix |psi><psi|.
    pub fn density(&self) -> ComplexMatrix {
        let n = self.amps.len();
        let mut rho = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                rho.set(i, j, self.amps[i] * self.amps[j].conj());
            }
        }
        rho
    }

    /// Reduced density matrix on the subsystems in `keep`.
    pub fn reduced(&self, keep: &[usize]) -> Result<ComplexMatrix> {
        self.density().partial_trace(&self.dims, keep)
    }
}

/// The five coefficients and phase of the canonical three-qubit
/// family: lam0 on |000>, lam1 e^{i phi} on the A-only excitation, and
/// lam2, lam3, lam4 on the components pairing A with B, with C, and
/// with both. The pairwise concurrences are 2 lam0 lam2 for (A, B) and
/// 2 lam0 lam3 for (A, C).
#[derive(Debug, Clone, Copy)]
pub struct AcinParams {
    pub lambda: [f64; 5],
    pub phi: f64,
}

impl AcinParams {
    /// Coefficients (1/2, 1/2, 1/2, sqrt2/4, sqrt2/4): the bundled
    /// concurrence comparison example.
    pub fn example_i() -> Self {
        let r = 2.0f64.sqrt() / 4.0;
        Self::new([0.5, 0.5, 0.5, r, r], 0.0).unwrap()
    }

    /// Coefficients (sqrt2/3, sqrt2/3, sqrt2/3, sqrt6/6, sqrt6/6): the
    /// CREN comparison example.
    pub fn example_ii() -> Self {
        let a = 2.0f64.sqrt() / 3.0;
        let b = 6.0f64.sqrt() / 6.0;
        Self::new([a, a, a, b, b], 0.0).unwrap()
    }

    /// Coefficients (sqrt2/3, 0, sqrt5/3, sqrt2/3, 0): the Bures
    /// comparison example.
    pub fn example_iii() -> Self {
        let a = 2.0f64.sqrt() / 3.0;
        let c = 5.0f64.sqrt() / 3.0;
        Self::new([a, 0.0, c, a, 0.0], 0.0).unwrap()
    }

    pub fn new(lambda: [f64; 5], phi: f64) -> Result<Self> {
        if lambda.iter().any(|l| !l.is_finite()) || !phi.is_finite() {
            return Err(Error::InvalidInput("parameters must be finite".into()));
        }
        if lambda.iter().any(|&l| l < 0.0) {
            return Err(Error::InvalidInput(
                "every lambda must be nonnegative".into(),
            ));
        }
        let norm2: f64 = lambda.iter().map(|l| l * l).sum();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidInput(format!(
                "lambda coefficients are not normalized: sum lambda^2 = {norm2}"
            )));
        }
        Ok(Self { lambda, phi })
    }
}

/// Build the canonical three-qubit state from its coefficients.
/// Subsystem order is (A, B, C): lam2 excites A together with B and
/// lam3 excites A together with C, so that the reduced pair (A, B)
/// carries concurrence 2 lam0 lam2 and (A, C) carries 2 lam0 lam3.
pub fn acin_state(p: &AcinParams) -> Result<PureState> {
    let [l0, l1, l2, l3, l4] = p.lambda;
    let mut amps = vec![Complex64::new(0.0, 0.0); 8];
    amps[0b000] = Complex64::new(l0, 0.0);
    amps[0b100] = Complex64::from_polar(l1, p.phi);
    amps[0b110] = Complex64::new(l2, 0.0);
    amps[0b101] = Complex64::new(l3, 0.0);
    amps[0b111] = Complex64::new(l4, 0.0);
    PureState::new(vec![2, 2, 2], amps)
}

/// Closed-form concurrences of the canonical state:
/// C(A|BC) = 2 lam0 sqrt(lam2^2 + lam3^2 + lam4^2), C(AB) = 2 lam0 lam2,
/// C(AC) = 2 lam0 lam3. Returned in that order.
pub fn closed_form_concurrences(p: &AcinParams) -> (f64, f64, f64) {
    let [l0, _, l2, l3, l4] = p.lambda;
    let c_abc = 2.0 * l0 * (l2 * l2 + l3 * l3 + l4 * l4).sqrt();
    (c_abc, 2.0 * l0 * l2, 2.0 * l0 * l3)
}

/// Random n-qubit pure state: amplitudes drawn as independent standard
/// complex Gaussians, then normalized. Deterministic for a fixed seed.
pub fn random_pure_state(n_qubits: usize, seed: u64) -> Result<PureState> {
    if !(1..=4).contains(&n_qubits) {
        return Err(Error::InvalidInput(format!(
            "n_qubits must be between 1 and 4, got {n_qubits}"
        )));
    }
    let mut rng = SweepRng::seed_from_u64(seed);
    Ok(random_pure_state_with(n_qubits, &mut rng))
}

/// Same sampler, drawing from a caller-owned generator.
pub fn random_pure_state_with(n_qubits: usize, rng: &mut SweepRng) -> PureState {
    let n = 1usize << n_qubits;
    let mut amps: Vec<Complex64> = (0..n)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Complex64::new(re, im)
        })
        .collect();
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    PureState {
        dims: vec![2; n_qubits],
        amps,
    }
}

/// Random coefficients for the canonical family: absolute Gaussians
/// normalized in l2, phase uniform in [0, 2 pi).
pub fn random_acin_params_with(rng: &mut SweepRng) -> AcinParams {
    use rand::Rng;
    let mut lambda = [0.0f64; 5];
    loop {
        let mut norm2 = 0.0;
        for l in &mut lambda {
            let g: f64 = StandardNormal.sample(rng);
            *l = g.abs();
            norm2 += *l * *l;
        }
        if norm2 > 1e-12 {
            let norm = norm2.sqrt();
            for l in &mut lambda {
                *l /= norm;
            }
            break;
        }
    }
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    AcinParams { lambda, phi }
}


#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;

    #[test]
    fn acin_product_state() {
        let p = AcinParams::new([1.0, 0.0, 0.0, 0.0, 0.0], 0.0).unwrap();
        let s = acin_state(&p).unwrap();
        assert!((s.amplitudes()[0].re - 1.0).abs() < 1e-15);
        assert!(s.amplitudes()[1..].iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn acin_example_i_normalizes() {
        // 1/4 + 1/4 + 1/4 + 1/8 + 1/8 = 1
        let p = AcinParams::example_i();
        let s = acin_state(&p).unwrap();
        let n2: f64 = s.amplitudes().iter().map(|z| z.norm_sqr()).sum();
        assert!((n2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn acin_example_iii_normalizes() {
        // 2/9 + 5/9 + 2/9 = 1
        let p = AcinParams::example_iii();
        assert!(acin_state(&p).is_ok());
    }

    #[test]
    fn acin_rejects_unnormalized() {
        assert!(matches!(
            AcinParams::new([1.0, 1.0, 0.0, 0.0, 0.0], 0.0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn acin_amplitude_placement() {
        let p = AcinParams::new(
            [0.5, 0.5, 0.5, 2.0f64.sqrt() / 4.0, 2.0f64.sqrt() / 4.0],
            0.3,
        )
        .unwrap();
        let s = acin_state(&p).unwrap();
        let a = s.amplitudes();
        assert!((a[0].re - 0.5).abs() < 1e-15 && a[0].im == 0.0);
        assert!((a[4] - Complex64::from_polar(0.5, 0.3)).norm() < 1e-15);
        // lam2 pairs A with B (index 0b110), lam3 pairs A with C (0b101)
        assert!((a[6].re - 0.5).abs() < 1e-15);
        assert!((a[5].re - 2.0f64.sqrt() / 4.0).abs() < 1e-15);
        assert!((a[7].re - 2.0f64.sqrt() / 4.0).abs() < 1e-15);
        assert!(a[1].norm() == 0.0 && a[2].norm() == 0.0 && a[3].norm() == 0.0);
    }

    #[test]
    fn density_of_basis_state() {
        let s = PureState::new(
            vec![2],
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        )
        .unwrap();
        let rho = s.density();
        assert!(rho.max_abs_diff(&ComplexMatrix::from_diag(&[1.0, 0.0])) < 1e-15);
    }

    #[test]
    fn density_of_plus_state() {
        let h = 1.0 / 2.0f64.sqrt();
        let s = PureState::new(
            vec![2],
            vec![Complex64::new(h, 0.0), Complex64::new(h, 0.0)],
        )
        .unwrap();
        let rho = s.density();
        for i in 0..2 {
            for j in 0..2 {
                assert!((rho.get(i, j).re - 0.5).abs() < 1e-12);
                assert!(rho.get(i, j).im.abs() < 1e-15);
            }
        }
    }

    #[test]
    fn density_purity_is_one() {
        let s = random_pure_state(3, 99).unwrap();
        let rho = s.density();
        let purity = rho.matmul(&rho).unwrap().trace().re;
        assert!((purity - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reduced_product_state() {
        // |0> (x) |1>, keep subsystem 0
        let mut amps = vec![Complex64::new(0.0, 0.0); 4];
        amps[1] = Complex64::new(1.0, 0.0);
        let s = PureState::new(vec![2, 2], amps).unwrap();
        let r = s.reduced(&[0]).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::from_diag(&[1.0, 0.0])) < 1e-15);
    }

    #[test]
    fn reduced_ghz_is_maximally_mixed() {
        let r = ghz3().reduced(&[0]).unwrap();
        let expect = ComplexMatrix::identity(2).scale(Complex64::new(0.5, 0.0));
        assert!(r.max_abs_diff(&expect) < 1e-12);
    }

    #[test]
    fn reduced_is_density() {
        let s = random_pure_state(3, 5).unwrap();
        for keep in [&[0usize][..], &[1], &[0, 1], &[0, 2], &[1, 2]] {
            let r = s.reduced(keep).unwrap();
            assert!((r.trace().re - 1.0).abs() < 1e-12);
            r.check_density().unwrap();
        }
    }

    #[test]
    fn closed_form_example_i() {
        let (c_abc, c_ab, c_ac) = closed_form_concurrences(&AcinParams::example_i());
        assert!((c_abc - 2.0f64.sqrt() / 2.0).abs() < 1e-12);
        assert!((c_ab - 0.5).abs() < 1e-12);
        assert!((c_ac - 2.0f64.sqrt() / 4.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_product_state() {
        let p = AcinParams::new([1.0, 0.0, 0.0, 0.0, 0.0], 0.0).unwrap();
        assert_eq!(closed_form_concurrences(&p), (0.0, 0.0, 0.0));
    }

    #[test]
    fn closed_form_example_ii() {
        let (c_abc, c_ab, c_ac) = closed_form_concurrences(&AcinParams::example_ii());
        assert!((c_abc - 2.0 * 10.0f64.sqrt() / 9.0).abs() < 1e-12);
        assert!((c_ab - 4.0 / 9.0).abs() < 1e-12);
        assert!((c_ac - 2.0 * 3.0f64.sqrt() / 9.0).abs() < 1e-12);
    }

    #[test]
    fn random_state_is_normalized() {
        let s = random_pure_state(1, 7).unwrap();
        let n2: f64 = s.amplitudes().iter().map(|z| z.norm_sqr()).sum();
        assert!((n2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_state_is_deterministic() {
        let a = random_pure_state(3, 1).unwrap();
        let b = random_pure_state(3, 1).unwrap();
        assert_eq!(a.amplitudes(), b.amplitudes());
        let c = random_pure_state(3, 2).unwrap();
        assert!(a
            .amplitudes()
            .iter()
            .zip(c.amplitudes())
            .any(|(x, y)| (x - y).norm() > 1e-12));
    }

    #[test]
    fn random_state_rejects_bad_qubit_count() {
        assert!(random_pure_state(0, 1).is_err());
        assert!(random_pure_state(5, 1).is_err());
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let s =
            PureState::from_json(r#"{"dims":[2,2],"amps":[[1.0,0.0],[0,0],[0,0],[0,0]]}"#).unwrap();
        assert_eq!(s.dims(), &[2, 2]);
        assert!(matches!(PureState::from_json("{"), Err(Error::Parse(_))));
        // wrong amplitude count
        assert!(PureState::from_json(r#"{"dims":[2,2],"amps":[[1.0,0.0]]}"#).is_err());
        // unnormalized
        assert!(PureState::from_json(r#"{"dims":[2],"amps":[[1.0,0.0],[1.0,0.0]]}"#).is_err());
    }
}
