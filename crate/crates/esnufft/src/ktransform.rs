//! Fourier transforms of the unscaled kernels.
//!
//! Quadrature gives ground truth for both families; the KB transform also has
//! a closed form. For the ES kernel the saddle-point asymptotics above and
//! below cutoff, the large-frequency sinc tail, the deviation from that tail,
//! and an explicit tail bound are provided. The Fourier convention is
//! phihat(xi) = int phi(z) e^{i xi z} dz.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::kernels::{kernel_eval, KernelSpec};
use crate::specfun::{gauss_legendre, sinc, QuadratureRule};
use crate::{Error, Result};

/// Hard cap on the quadrature order; larger requests signal
/// `FrequencyTooLarge` so callers fall back to asymptotics or bounds.
pub(crate) const MAX_QUAD_ORDER: usize = 20_000;

/// One evaluated spectrum point: unscaled frequency, scaled frequency
/// rho = xi / beta, and the transform value.
#[derive(Debug, Clone, Copy)]
pub struct SpectrumSample {
    pub xi: f64,
    pub rho: f64,
    pub value: Complex64,
}

impl SpectrumSample {
    pub fn new(beta: f64, xi: f64, value: Complex64) -> Self {
        SpectrumSample {
            xi,
            rho: xi / beta,
            value,
        }
    }
}

/// Quadrature order for frequency `xi` and shape `beta`: enough nodes for the
/// integrand's oscillation (~|xi|) and growth (~beta), plus a safety margin.
fn raw_order(beta: f64, xi: f64) -> usize {
    (((xi.abs() + beta) / 2.0).ceil() as usize) + 40
}

/// Rules are bucketed so nearby frequencies share one cached rule; rounding
/// the order up never hurts accuracy.
fn bucketed(order: usize) -> usize {
    if order <= 1024 {
        order.div_ceil(32) * 32
    } else {
        order.div_ceil(256) * 256
    }
}

pub(crate) fn quad_rule_for(beta: f64, xi: f64) -> Result<Arc<QuadratureRule>> {
    let raw = raw_order(beta, xi);
    if raw > MAX_QUAD_ORDER {
        return Err(Error::FrequencyTooLarge(xi));
    }
    gauss_legendre(bucketed(raw))
}

/// Largest |xi| the quadrature accepts for this beta.
pub(crate) fn quad_xi_limit(beta: f64) -> f64 {
    2.0 * (MAX_QUAD_ORDER - 40) as f64 - beta
}

/// Integrate an even real integrand against e^{i xi z} over [-1, 1] by
/// pairing the symmetric nodes, so the imaginary part vanishes identically.
fn even_oscillatory_integral<F: Fn(f64) -> f64>(rule: &QuadratureRule, xi: f64, f: F) -> f64 {
    let n = rule.nodes.len();
    let mut sum = 0.0;
    for i in 0..n / 2 {
        let x = rule.nodes[n - 1 - i];
        sum += rule.weights[n - 1 - i] * f(x) * (xi * x).cos();
    }
    sum *= 2.0;
    if n % 2 == 1 {
        sum += rule.weights[n / 2] * f(0.0);
    }
    sum
}

/// Kernel Fourier transform by Gauss–Legendre quadrature.
///
/// The kernels are real and even, so the result is real; it is returned as a
/// complex number with exactly zero imaginary part. Accuracy is validated by
/// doubled-order self-checks in the tests.
pub fn ft_quadrature(spec: &KernelSpec, xi: f64) -> Result<Complex64> {
    Ok(Complex64::new(ft_quadrature_real(spec, xi)?, 0.0))
}

pub(crate) fn ft_quadrature_real(spec: &KernelSpec, xi: f64) -> Result<f64> {
    let rule = quad_rule_for(spec.beta(), xi)?;
    Ok(even_oscillatory_integral(&rule, xi, |z| {
        kernel_eval(spec, z)
    }))
}

/// Closed-form KB transform: (2/I0(beta)) sinh(sqrt(beta^2-xi^2))/sqrt(beta^2-xi^2)
/// below cutoff, its analytic continuation (2/I0(beta)) sin(sqrt(xi^2-beta^2))/sqrt(xi^2-beta^2)
/// above, and the limit 2/I0(beta) at |xi| = beta. Near the cutoff a series
/// in beta^2 - xi^2 avoids the 0/0 cancellation.
pub fn kb_ft_analytic(beta: f64, xi: f64) -> f64 {
    let u = beta * beta - xi * xi;
    let scale = 2.0 / crate::specfun::bessel_i0(beta);
    if u.abs() <= 1.0 {
        // sinh(sqrt(u))/sqrt(u) = sum_k u^k / (2k+1)!, valid for either sign.
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..=12 {
            let kf = k as f64;
            term *= u / ((2.0 * kf) * (2.0 * kf + 1.0));
            sum += term;
        }
        scale * sum
    } else if u > 0.0 {
        let s = u.sqrt();
        scale * s.sinh() / s
    } else {
        let s = (-u).sqrt();
        scale * s.sin() / s
    }
}

/// Leading saddle-point approximation of the ES transform below cutoff:
/// sqrt(2 pi / beta) (1-rho^2)^{-3/4} e^{beta (sqrt(1-rho^2) - 1)}.
pub fn es_ft_below_cutoff(beta: f64, rho: f64) -> Result<f64> {
    if rho.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "below-cutoff form requires |rho| < 1, got {rho}"
        )));
    }
    let one_minus = 1.0 - rho * rho;
    Ok((2.0 * PI / beta).sqrt() * one_minus.powf(-0.75) * (beta * (one_minus.sqrt() - 1.0)).exp())
}

/// Two-saddle approximation of the ES transform above cutoff:
/// 2 sqrt(2 pi / beta) e^{-beta} sin(beta sqrt(rho^2-1) - pi/4) / (rho^2-1)^{3/4}.
pub fn es_ft_above_cutoff(beta: f64, rho: f64) -> Result<f64> {
    if rho.abs() <= 1.0 {
        return Err(Error::Domain(format!(
            "above-cutoff form requires |rho| > 1, got {rho}"
        )));
    }
    let excess = rho * rho - 1.0;
    Ok(2.0 * (2.0 * PI / beta).sqrt() * (-beta).exp() * (beta * excess.sqrt() - PI / 4.0).sin()
        / excess.powf(0.75))
}

/// Large-frequency sinc tail 2 e^{-beta} sin(xi)/xi set by the kernel's
/// discontinuities of strength e^{-beta} at the support edge.
pub fn es_ft_sinc_tail(beta: f64, xi: f64) -> f64 {
    2.0 * (-beta).exp() * sinc(xi)
}

/// Deviation of the scaled ES transform from the sinc tail:
/// Dhat(beta, xi) = e^{beta} phihat(xi) - 2 sin(xi)/xi, computed directly as
/// the transform of e^{beta sqrt(1-z^2)} - 1 (the subtracted-top-hat form),
/// which avoids catastrophic cancellation at large xi.
pub fn es_ft_deviation(beta: f64, xi: f64) -> Result<Complex64> {
    let rule = quad_rule_for(beta, xi)?;
    let re = even_oscillatory_integral(&rule, xi, |z| {
        ((beta * (1.0 - z * z).max(0.0).sqrt()).exp() - 1.0)
    });
    Ok(Complex64::new(re, 0.0))
}

/// Explicit ES tail bound 9 e^{-beta} (beta^2/xi^2 + 1/|xi|), valid for
/// |xi| >= 3 beta.
pub fn es_ft_tail_bound(beta: f64, xi: f64) -> Result<f64> {
    if xi.abs() < 3.0 * beta {
        return Err(Error::Domain(format!(
            "tail bound requires |xi| >= 3 beta = {}, got {xi}",
            3.0 * beta
        )));
    }
    Ok(9.0 * (-beta).exp() * (beta * beta / (xi * xi) + 1.0 / xi.abs()))
}
