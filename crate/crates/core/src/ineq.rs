//! Scalar kernels bounding (1 + t)^x from below, parameterized by
//! m >= 0, together with the competitor chains they dominate and the
//! admissible-exponent helpers.
//!
//! Two regimes are covered, split by where t sits relative to the
//! side-information parameter k:
//!   case 1: 0 < t <= k <= 1,
//!   case 2: t >= k >= 1,
//! both valid for x >= 1 + log2(m + 2).

use crate::error::{Error, Result};

/// Equality boundaries of all domain checks are admitted at this
/// tolerance.
pub const DOMAIN_TOL: f64 = 1e-12;

/// Smallest admissible exponent for a bound family: (1 + log2(m+2)) * gamma.
pub fn alpha_min(m: f64, gamma: f64) -> f64 {
    (1.0 + (m + 2.0).log2()) * gamma
}

/// Largest integer m whose admissibility region still contains alpha:
/// floor(2^(alpha/gamma - 1) - 2), clamped below at zero.
pub fn optimal_m(alpha: f64, gamma: f64) -> u64 {
    let raw = 2f64.powf(alpha / gamma - 1.0) - 2.0;
    if raw <= 0.0 {
        0
    } else {
        raw.floor() as u64
    }
}

fn check_admissible(x: f64, m: f64) -> Result<()> {
    if !x.is_finite() || !m.is_finite() {
        return Err(Error::InvalidInput("x and m must be finite".into()));
    }
    if m < 0.0 {
        return Err(Error::InvalidInput(format!(
            "m must be nonnegative, got {m}"
        )));
    }
    let floor = 1.0 + (m + 2.0).log2();
    if x < floor - DOMAIN_TOL {
        return Err(Error::InvalidInput(format!(
            "x = {x} below the admissible floor 1 + log2(m + 2) = {floor}"
        )));
    }
    Ok(())
}

/// The monotone kernel h(x, y) = (1 + y)^x - y^x + y^(-x) - m x y,
/// nondecreasing in y on y >= 1 whenever x >= 1 + log2(m + 2).
/// Both case bounds are h(x, .) evaluated at two points of that ray.
pub fn h_kernel(x: f64, y: f64, m: f64) -> Result<f64> {
    check_admissible(x, m)?;
    if !y.is_finite() || y < 1.0 - DOMAIN_TOL {
        return Err(Error::InvalidInput(format!(
            "y must be at least 1, got {y}"
        )));
    }
    Ok((1.0 + y).powf(x) - y.powf(x) + y.powf(-x) - m * x * y)
}

fn check_case1_domain(t: f64, k: f64, x: f64, m: f64) -> Result<()> {
    check_admissible(x, m)?;
    if !t.is_finite() || !k.is_finite() {
        return Err(Error::InvalidInput("t and k must be finite".into()));
    }
    if t < -DOMAIN_TOL || t > k + DOMAIN_TOL || k > 1.0 + DOMAIN_TOL || k <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "case 1 needs 0 <= t <= k <= 1, got t = {t}, k = {k}"
        )));
    }
    Ok(())
}

fn check_case2_domain(t: f64, k: f64, x: f64, m: f64) -> Result<()> {
    check_admissible(x, m)?;
    if !t.is_finite() || !k.is_finite() {
        return Err(Error::InvalidInput("t and k must be finite".into()));
    }
    if k < 1.0 - DOMAIN_TOL || t < k - DOMAIN_TOL {
        return Err(Error::InvalidInput(format!(
            "case 2 needs t >= k >= 1, got t = {t}, k = {k}"
        )));
    }
    Ok(())
}

/// Case-1 lower bound on (1 + t)^x:
/// 1 + (((1+k)^x - 1)/k^x + k^x - t^x) t^x + m x (1/t - 1/k) t^x.
/// The t = 0 endpoint is defined as 1 by continuous limit.
pub fn case1_rhs(t: f64, k: f64, x: f64, m: f64) -> Result<f64> {
    check_case1_domain(t, k, x, m)?;
    let t = t.max(0.0);
    if t == 0.0 {
        return Ok(1.0);
    }
    let tx = t.powf(x);
    let base = 1.0 + (((1.0 + k).powf(x) - 1.0) / k.powf(x) + k.powf(x) - tx) * tx;
    // (1/t - 1/k) t^x written as t^(x-1) - t^x / k, stable for small t.
    Ok(base + m * x * (t.powf(x - 1.0) - tx / k))
}

/// Case-2 lower bound on (1 + t)^x:
/// t^x + (1+k)^x - k^x + k^(-x) - t^(-x) + m x (t - k).
pub fn case2_rhs(t: f64, k: f64, x: f64, m: f64) -> Result<f64> {
    check_case2_domain(t, k, x, m)?;
    Ok(t.powf(x) + (1.0 + k).powf(x) - k.powf(x) + k.powf(-x) - t.powf(-x) + m * x * (t - k))
}

/// The case-1 chain of lower bounds on (1 + t)^x, tightest first.
/// Every entry dominates the next on the shared domain.
#[derive(Debug, Clone, Copy)]
pub struct Case1Chain {
    /// Full m-parameterized bound.
    pub full: f64,
    /// m = 0 specialization.
    pub m_zero: f64,
    /// Keeps only the ((1+k)^x - 1)/k^x coefficient.
    pub ratio_only: f64,
    /// Coefficient 2^x - 1.
    pub two_power: f64,
    /// Coefficient x.
    pub linear: f64,
    /// Coefficient 1.
    pub plain: f64,
}

impl Case1Chain {
    pub fn as_array(&self) -> [f64; 6] {
        [
            self.full,
            self.m_zero,
            self.ratio_only,
            self.two_power,
            self.linear,
            self.plain,
        ]
    }
}

pub fn case1_chain(t: f64, k: f64, x: f64, m: f64) -> Result<Case1Chain> {
    check_case1_domain(t, k, x, m)?;
    let t = t.max(0.0);
    let tx = t.powf(x);
    Ok(Case1Chain {
        full: case1_rhs(t, k, x, m)?,
        m_zero: case1_rhs(t, k, x, 0.0)?,
        ratio_only: 1.0 + (((1.0 + k).powf(x) - 1.0) / k.powf(x)) * tx,
        two_power: 1.0 + (2f64.powf(x) - 1.0) * tx,
        linear: 1.0 + x * tx,
        plain: 1.0 + tx,
    })
}

/// The case-2 chain of lower bounds on (1 + t)^x, tightest first.
#[derive(Debug, Clone, Copy)]
pub struct Case2Chain {
    /// Full m-parameterized bound.
    pub full: f64,
    /// m = 0 specialization.
    pub m_zero: f64,
    /// Drops the k^(-x) - t^(-x) correction.
    pub no_inverse: f64,
    /// t^x + 2^x - 1.
    pub two_power: f64,
    /// t^x + 1.
    pub plain: f64,
}

impl Case2Chain {
    pub fn as_array(&self) -> [f64; 5] {
        [
            self.full,
            self.m_zero,
            self.no_inverse,
            self.two_power,
            self.plain,
        ]
    }
}

pub fn case2_chain(t: f64, k: f64, x: f64, m: f64) -> Result<Case2Chain> {
    check_case2_domain(t, k, x, m)?;
    let tx = t.powf(x);
    Ok(Case2Chain {
        full: case2_rhs(t, k, x, m)?,
        m_zero: case2_rhs(t, k, x, 0.0)?,
        no_inverse: tx + (1.0 + k).powf(x) - k.powf(x),
        two_power: tx + 2f64.powf(x) - 1.0,
        plain: tx + 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn alpha_min_values() {
        assert!((alpha_min(0.0, 2.0) - 4.0).abs() < 1e-12);
        assert!((alpha_min(2.0, 2.0) - 6.0).abs() < 1e-12);
        assert!((alpha_min(2.0, 1.0) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn optimal_m_values() {
        assert_eq!(optimal_m(4.0, 2.0), 0);
        assert_eq!(optimal_m(6.0, 2.0), 2);
        // 2^2.5 - 2 = 3.656..., floor 3
        assert_eq!(optimal_m(7.0, 2.0), 3);
        assert_eq!(optimal_m(1.0, 2.0), 0);
    }

    #[test]
    fn optimal_m_stays_admissible() {
        for i in 0..200 {
            let alpha = 4.0 + i as f64 * 0.1;
            let m = optimal_m(alpha, 2.0) as f64;
            assert!(
                alpha_min(m, 2.0) <= alpha + 1e-9,
                "alpha = {alpha}, m = {m}"
            );
        }
    }

    #[test]
    fn h_kernel_known_values() {
        assert!((h_kernel(2.0, 1.0, 0.0).unwrap() - 4.0).abs() < 1e-12);
        // h(x, 1, m) = 2^x - m x
        assert!((h_kernel(3.0, 1.0, 2.0).unwrap() - 2.0).abs() < 1e-12);
        // 27 - 8 + 1/8 - 6
        assert!((h_kernel(3.0, 2.0, 1.0).unwrap() - 13.125).abs() < 1e-12);
    }

    #[test]
    fn h_kernel_domain_errors() {
        assert!(h_kernel(2.0, 0.5, 0.0).is_err());
        assert!(h_kernel(1.5, 1.0, 0.0).is_err());
        assert!(h_kernel(3.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn case1_equality_endpoint() {
        // t = k = 1, m = 0, x = 2: bound meets (1 + 1)^2 = 4.
        assert!((case1_rhs(1.0, 1.0, 2.0, 0.0).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn case1_frozen_value() {
        // 1 + ((1.8^3 - 1)/0.8^3 + 0.8^3 - 0.125) 0.125 + 6 (2 - 1.25) 0.125
        let v = case1_rhs(0.5, 0.8, 3.0, 2.0).unwrap();
        assert!((v - 2.7905625).abs() < 1e-12);
    }

    #[test]
    fn case1_m_term_vanishes_at_t_eq_k() {
        for m in [0.0, 1.0, 3.5, 6.0] {
            let with_m = case1_rhs(0.8, 0.8, 4.0, m).unwrap();
            let no_m = case1_rhs(0.8, 0.8, 4.0, 0.0).unwrap();
            assert!((with_m - no_m).abs() < 1e-12);
        }
    }

    #[test]
    fn case1_zero_endpoint_is_one() {
        assert!((case1_rhs(0.0, 0.5, 3.0, 2.0).unwrap() - 1.0).abs() == 0.0);
    }

    #[test]
    fn case1_domain_errors() {
        assert!(case1_rhs(0.9, 0.8, 3.0, 2.0).is_err()); // t > k
        assert!(case1_rhs(0.5, 1.2, 3.0, 0.0).is_err()); // k > 1
        assert!(case1_rhs(0.5, 0.8, 2.5, 2.0).is_err()); // x below floor
    }

    #[test]
    fn case2_equality_endpoint() {
        assert!((case2_rhs(1.0, 1.0, 2.0, 0.0).unwrap() - 4.0).abs() < 1e-12);
        // t = k makes the bound exact for any m.
        for m in [0.0, 2.0, 5.0] {
            let x = 1.0 + (m + 2.0f64).log2() + 0.5;
            let t = 1.7;
            let v = case2_rhs(t, t, x, m).unwrap();
            assert!((v - (1.0 + t).powf(x)).abs() < 1e-10);
        }
    }

    #[test]
    fn case2_frozen_value() {
        // 2.83936^3 + 8 - 1 + 1 - 2.83936^-3 + 6 * 1.83936
        let v = case2_rhs(2.83936, 1.0, 3.0, 2.0).unwrap();
        assert!((v - 41.88329590578613).abs() < 1e-12);
    }

    #[test]
    fn case2_domain_errors() {
        assert!(case2_rhs(0.9, 1.0, 3.0, 2.0).is_err()); // t < k
        assert!(case2_rhs(2.0, 0.5, 3.0, 0.0).is_err()); // k < 1
        assert!(case2_rhs(2.0, 1.0, 1.9, 0.0).is_err()); // x below floor
    }

    #[test]
    fn case1_chain_endpoint_values() {
        let chain = case1_chain(1.0, 1.0, 2.0, 0.0).unwrap();
        let expect = [4.0, 4.0, 4.0, 4.0, 3.0, 2.0];
        for (got, want) in chain.as_array().iter().zip(&expect) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn case1_chain_head_is_case1_rhs() {
        let chain = case1_chain(0.5, 0.8, 3.0, 2.0).unwrap();
        assert_eq!(chain.full, case1_rhs(0.5, 0.8, 3.0, 2.0).unwrap());
    }

    #[test]
    fn case2_chain_endpoint_values() {
        let chain = case2_chain(1.0, 1.0, 2.0, 0.0).unwrap();
        let expect = [4.0, 4.0, 4.0, 4.0, 2.0];
        for (got, want) in chain.as_array().iter().zip(&expect) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn case2_chain_frozen_values() {
        let chain = case2_chain(2.0, 1.0, 3.0, 0.0).unwrap();
        assert!((chain.full - 15.875).abs() < 1e-12);
        assert!((chain.no_inverse - 15.0).abs() < 1e-12);
        assert!((chain.two_power - 15.0).abs() < 1e-12);
        assert!((chain.plain - 9.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn case1_bound_below_binomial(
            t_frac in 0.001f64..1.0,
            k in 0.05f64..1.0,
            m in 0.0f64..6.0,
            x_frac in 0.0f64..1.0,
        ) {
            let t = t_frac * k;
            let x = (1.0 + (m + 2.0).log2()) + x_frac * (12.0 - (1.0 + (m + 2.0).log2()));
            let lhs = (1.0 + t).powf(x);
            let rhs = case1_rhs(t, k, x, m).unwrap();
            prop_assert!(rhs <= lhs * (1.0 + 1e-9) + 1e-12);
        }

        #[test]
        fn case2_bound_below_binomial(
            k in 1.0f64..5.0,
            t_extra in 0.0f64..45.0,
            m in 0.0f64..6.0,
            x_frac in 0.0f64..1.0,
        ) {
            let t = (k + t_extra).min(50.0);
            let x = (1.0 + (m + 2.0).log2()) + x_frac * (12.0 - (1.0 + (m + 2.0).log2()));
            let lhs = (1.0 + t).powf(x);
            let rhs = case2_rhs(t, k, x, m).unwrap();
            prop_assert!(rhs <= lhs * (1.0 + 1e-9) + 1e-12);
        }

        #[test]
        fn k1_specialization_matches_direct_formula(
            t in 0.001f64..1.0,
            m in 0.0f64..6.0,
            x_frac in 0.0f64..1.0,
        ) {
            let x = (1.0 + (m + 2.0).log2()) + x_frac * 6.0;
            let direct = 1.0 + (2f64.powf(x) - t.powf(x)) * t.powf(x)
                + m * x * (1.0 / t - 1.0) * t.powf(x);
            let v = case1_rhs(t, 1.0, x, m).unwrap();
            prop_assert!((v - direct).abs() <= 1e-12 * direct.abs().max(1.0));

            // case-2 analogue at k = 1
            let t2 = 1.0 / t;
            let direct2 = t2.powf(x) + 2f64.powf(x) - t2.powf(-x) + m * x * (t2 - 1.0);
            let v2 = case2_rhs(t2, 1.0, x, m).unwrap();
            prop_assert!((v2 - direct2).abs() <= 1e-12 * direct2.abs().max(1.0));
        }

        #[test]
        fn h_is_monotone_in_y(
            m in 0.0f64..6.0,
            x_frac in 0.0f64..1.0,
            y1 in 1.0f64..20.0,
            dy in 0.0f64..20.0,
        ) {
            let x = (1.0 + (m + 2.0).log2()) + x_frac * 6.0;
            let a = h_kernel(x, y1, m).unwrap();
            let b = h_kernel(x, y1 + dy, m).unwrap();
            prop_assert!(b >= a - 1e-12 * a.abs().max(1.0));
        }

        #[test]
        fn chains_are_nonincreasing(
            t_frac in 0.001f64..1.0,
            k in 0.05f64..1.0,
            m in 0.0f64..6.0,
            x_frac in 0.0f64..1.0,
        ) {
            let t = t_frac * k;
            let x = (1.0 + (m + 2.0).log2()) + x_frac * 6.0;
            let c1 = case1_chain(t, k, x, m).unwrap().as_array();
            for w in c1.windows(2) {
                prop_assert!(w[1] <= w[0] + 1e-12 * w[0].abs().max(1.0));
            }
            let (t2, k2) = (1.0 / t_frac, 1.0 / k);
            let c2 = case2_chain(t2.max(k2), k2, x, m).unwrap().as_array();
            for w in c2.windows(2) {
                prop_assert!(w[1] <= w[0] + 1e-12 * w[0].abs().max(1.0));
            }
        }
    }
}
