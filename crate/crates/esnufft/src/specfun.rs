//! Scalar special functions and Gauss–Legendre quadrature rules.
//!
//! Everything here is pure and reentrant. Quadrature rules are computed on
//! first use and cached per order behind a lock, so repeated transform
//! evaluations at many frequencies share the same immutable rule.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use crate::{Error, Result};

/// Power-series / asymptotic switchover for `bessel_i0`. Both branches are
/// cross-validated at the seam in tests.
const I0_SWITCH: f64 = 15.0;

/// Arguments beyond this overflow `exp(x)` in f64; the result is reported as
/// positive infinity.
const I0_OVERFLOW: f64 = 709.78;

/// Modified Bessel function of the first kind, order zero.
///
/// Uses the ascending power series for |x| <= 15 and the large-argument
/// asymptotic expansion beyond; relative error is below 1e-13 for |x| <= 700.
/// Negative arguments are folded by even symmetry. For |x| beyond the
/// representable range of `exp` the overflow is signalled by `f64::INFINITY`.
pub fn bessel_i0(x: f64) -> f64 {
    let ax = x.abs();
    if ax > I0_OVERFLOW {
        return f64::INFINITY;
    }
    if ax <= I0_SWITCH {
        // I0(x) = sum_k (x^2/4)^k / (k!)^2; all terms positive, no cancellation.
        let q = 0.25 * ax * ax;
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut k = 1.0;
        while term > 1e-18 * sum {
            term *= q / (k * k);
            sum += term;
            k += 1.0;
        }
        sum
    } else {
        // I0(x) ~ e^x/sqrt(2 pi x) * sum_k c_k / x^k with
        // c_k = prod_{j<=k} (2j-1)^2 / (k! 8^k); truncated at the smallest term.
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut k = 1.0;
        loop {
            let next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * ax);
            if next >= term || next < 1e-18 * sum {
                sum += next;
                break;
            }
            term = next;
            sum += term;
            k += 1.0;
            if k > 40.0 {
                break;
            }
        }
        ax.exp() / (2.0 * std::f64::consts::PI * ax).sqrt() * sum
    }
}

/// sinc(x) = sin(x)/x, with sinc(0) = 1.
///
/// Near zero the Taylor expansion avoids the 0/0 cancellation.
pub fn sinc(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0)
    } else {
        x.sin() / x
    }
}

/// Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
}

impl QuadratureRule {
    /// Integrate `f` over [-1, 1].
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Legendre polynomial P_n and derivative P_n' at `x` by upward recurrence.
fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 1..n {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    let deriv = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, deriv)
}

fn compute_gauss_legendre(order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::InvalidParameter(
            "quadrature order must be >= 1".into(),
        ));
    }
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    // Nodes come in +/- pairs; solve the upper half by Newton from the
    // Chebyshev-like initial guess.
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut converged = false;
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (p, dp) = legendre_and_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            deriv = dp;
            if dx.abs() <= 1e-15 * x.abs().max(1.0) {
                // one polishing step
                let (p2, dp2) = legendre_and_deriv(n, x);
                x -= p2 / dp2;
                deriv = dp2;
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::ConvergenceFailure(format!(
                "Gauss-Legendre Newton iteration stalled at order {n}"
            )));
        }
        let w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        nodes[i] = -x;
        weights[i] = w;
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        // Central node is exactly 0 for odd orders.
        let mid = n / 2;
        nodes[mid] = 0.0;
        let (_, dp) = legendre_and_deriv(n, 0.0);
        weights[mid] = 2.0 / (dp * dp);
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        order,
    })
}

static RULE_CACHE: LazyLock<Mutex<HashMap<usize, Arc<QuadratureRule>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Gauss–Legendre nodes and weights on [-1, 1], cached per order.
///
/// Nodes are computed by Newton iteration on the Legendre recurrence; the
/// returned rule is shared and immutable.
pub fn gauss_legendre(order: usize) -> Result<Arc<QuadratureRule>> {
    if let Some(rule) = RULE_CACHE.lock().unwrap().get(&order) {
        return Ok(rule.clone());
    }
    let rule = Arc::new(compute_gauss_legendre(order)?);
    RULE_CACHE
        .lock()
        .unwrap()
        .entry(order)
        .or_insert_with(|| rule.clone());
    Ok(rule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Independent power-series oracle for I0, 30 terms, summed smallest-first
    // with compensation.
    fn i0_series_oracle(x: f64) -> f64 {
        let q = 0.25 * x * x;
        let mut terms = [0.0f64; 31];
        terms[0] = 1.0;
        for k in 1..=30 {
            terms[k] = terms[k - 1] * q / ((k * k) as f64);
        }
        let mut sum = 0.0;
        let mut c = 0.0;
        for &t in terms.iter().rev() {
            let y = t - c;
            let s = sum + y;
            c = (s - sum) - y;
            sum = s;
        }
        sum
    }

    #[test]
    fn i0_at_zero_is_one() {
        assert_eq!(bessel_i0(0.0), 1.0);
    }

    #[test]
    fn i0_matches_series_oracle_at_four() {
        let oracle = i0_series_oracle(4.0);
        // reference: 11.301921952136330
        assert!((oracle - 11.301921952136330).abs() < 1e-12);
        assert!((bessel_i0(4.0) - oracle).abs() / oracle < 1e-13);
    }

    #[test]
    fn i0_large_argument_asymptotic() {
        // I0(x) e^{-x} sqrt(2 pi x) -> 1 as x -> infinity.
        let x: f64 = 500.0;
        let scaled = bessel_i0(x) * (-x).exp() * (2.0 * std::f64::consts::PI * x).sqrt();
        assert!((scaled - 1.0).abs() < 1e-2, "scaled = {scaled}");
    }

    #[test]
    fn i0_branch_seam_consistency() {
        // Evaluate both branches just either side of the switchover.
        let below = bessel_i0(15.0 - 1e-9);
        let above = bessel_i0(15.0 + 1e-9);
        assert!((below - above).abs() / below < 1e-12);
        // reference value I0(15) = 339649.3732979139
        assert!((bessel_i0(15.0) - 339649.3732979139).abs() / 339649.37 < 1e-12);
    }

    #[test]
    fn i0_overflow_is_signalled() {
        assert!(bessel_i0(800.0).is_infinite());
        assert!(bessel_i0(700.0).is_finite());
    }

    #[test]
    fn i0_monotone_increasing() {
        let mut prev = bessel_i0(0.0);
        for i in 1..=300 {
            let x = i as f64 * 2.0;
            if x > 700.0 {
                break;
            }
            let v = bessel_i0(x);
            assert!(v > prev, "I0 not increasing at x = {x}");
            prev = v;
        }
    }

    #[test]
    fn sinc_values() {
        assert_eq!(sinc(0.0), 1.0);
        assert!(sinc(std::f64::consts::PI).abs() <= 1e-15);
        let x = 1e-9;
        let expect = 1.0 - x * x / 6.0;
        assert!((sinc(x) - expect).abs() < 1e-16);
        // away from zero: plain sin x / x
        assert!((sinc(2.0) - 2.0f64.sin() / 2.0).abs() < 1e-16);
    }

    proptest! {
        #[test]
        fn sinc_is_even(x in -100.0f64..100.0) {
            prop_assert_eq!(sinc(x), sinc(-x));
        }
    }

    #[test]
    fn gl_order_one_is_midpoint() {
        let r = gauss_legendre(1).unwrap();
        assert_eq!(r.nodes.len(), 1);
        assert!(r.nodes[0].abs() < 1e-15);
        assert!((r.weights[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn gl_order_two_closed_form() {
        let r = gauss_legendre(2).unwrap();
        let x = 1.0 / 3.0f64.sqrt();
        assert!((r.nodes[0] + x).abs() < 1e-15);
        assert!((r.nodes[1] - x).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-15);
        assert!((r.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn gl_order_five_integrates_z8() {
        let r = gauss_legendre(5).unwrap();
        let v = r.integrate(|z| z.powi(8));
        assert!((v - 2.0 / 9.0).abs() < 1e-13);
    }

    #[test]
    fn gl_node_residuals_small() {
        for order in [3usize, 16, 64, 257, 512] {
            let r = gauss_legendre(order).unwrap();
            for &x in &r.nodes {
                let (p, _) = legendre_and_deriv(order, x);
                assert!(p.abs() <= 1e-14, "order {order}: |P({x})| = {:.2e}", p.abs());
            }
        }
    }

    #[test]
    fn gl_invariants_all_orders_to_512() {
        // Weight sum, node monotonicity, and monomial exactness
        // (incremental powers: positive even-monomial sums have no
        // cancellation).
        for order in 1..=512usize {
            let r = gauss_legendre(order).unwrap();
            let wsum: f64 = r.weights.iter().sum();
            assert!((wsum - 2.0).abs() < 1e-13, "order {order}: sum w = {wsum}");
            assert!(r.weights.iter().all(|&w| w > 0.0));
            for i in 1..r.nodes.len() {
                assert!(r.nodes[i] > r.nodes[i - 1]);
            }
            let kmax = 2 * order - 1;
            let mut sums = vec![0.0f64; kmax + 1];
            for (&x, &w) in r.nodes.iter().zip(&r.weights) {
                let mut p = 1.0;
                for s in sums.iter_mut() {
                    *s += w * p;
                    p *= x;
                }
            }
            for (k, &s) in sums.iter().enumerate() {
                let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
                let tol = 1e-12 * exact.abs().max(1.0);
                assert!(
                    (s - exact).abs() <= tol,
                    "order {order}, monomial z^{k}: got {s}, want {exact}"
                );
            }
        }
    }
}
