//! Spreading kernels on [-1, 1]: the exponential-of-semicircle (ES) and
//! Kaiser–Bessel (KB) families, their scaled periodization, the shape
//! parameter map beta(gamma, w, sigma), and the large-beta asymptotic forms
//! used for kernel comparisons.

use crate::fftcore::next_even_five_smooth;
use crate::specfun::bessel_i0;
use crate::{Error, Result};

use std::f64::consts::PI;

/// Kernel family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelFamily {
    /// phi(z) = exp(beta (sqrt(1-z^2) - 1)) on [-1, 1], zero otherwise.
    Es,
    /// phi(z) = I0(beta sqrt(1-z^2)) / I0(beta) on [-1, 1], zero otherwise.
    Kb,
}

/// An unscaled kernel: family plus shape parameter.
#[derive(Debug, Clone, Copy)]
pub struct KernelSpec {
    family: KernelFamily,
    beta: f64,
    /// I0(beta) for KB (the normalization), 1 for ES.
    i0_beta: f64,
}

impl KernelSpec {
    pub fn new(family: KernelFamily, beta: f64) -> Result<Self> {
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "kernel shape parameter beta must be positive and finite, got {beta}"
            )));
        }
        let i0_beta = match family {
            KernelFamily::Es => 1.0,
            KernelFamily::Kb => bessel_i0(beta),
        };
        if !i0_beta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "beta = {beta} overflows the KB normalization I0(beta)"
            )));
        }
        Ok(KernelSpec {
            family,
            beta,
            i0_beta,
        })
    }

    pub fn family(&self) -> KernelFamily {
        self.family
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Kernel value at the support edge |z| = 1 (the discontinuity strength).
    pub fn edge_value(&self) -> f64 {
        match self.family {
            KernelFamily::Es => (-self.beta).exp(),
            KernelFamily::Kb => 1.0 / self.i0_beta,
        }
    }
}

/// Shape parameter rule beta = gamma pi w (1 - 1/(2 sigma)).
///
/// `gamma` is the safety factor keeping the kernel's spectral cutoff below
/// the lowest aliased frequency.
pub fn beta_from(gamma: f64, w: usize, sigma: f64) -> Result<f64> {
    if !(gamma > 0.0 && gamma <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "safety factor gamma must lie in (0, 1], got {gamma}"
        )));
    }
    if w < 2 {
        return Err(Error::InvalidParameter(format!(
            "kernel width must be >= 2 grid points, got {w}"
        )));
    }
    if !(sigma > 1.0) {
        return Err(Error::InvalidParameter(format!(
            "upsampling factor sigma must exceed 1, got {sigma}"
        )));
    }
    Ok(gamma * PI * w as f64 * (1.0 - 0.5 / sigma))
}

/// Evaluate the unscaled kernel. Exactly zero outside [-1, 1]; the value at
/// |z| = 1 uses the inside branch (closed-support convention).
pub fn kernel_eval(spec: &KernelSpec, z: f64) -> f64 {
    if z.abs() > 1.0 {
        return 0.0;
    }
    let s = (1.0 - z * z).max(0.0).sqrt();
    match spec.family {
        KernelFamily::Es => (spec.beta * (s - 1.0)).exp(),
        KernelFamily::Kb => bessel_i0(spec.beta * s) / spec.i0_beta,
    }
}

/// All sizing parameters of one transform.
///
/// Construction picks the fine grid as the smallest even 5-smooth n >= sigma*N
/// and recomputes sigma = n/N, so the stored upsampling factor reflects the
/// actual grid.
#[derive(Debug, Clone, Copy)]
pub struct GridParams {
    n_modes: usize,
    sigma: f64,
    fine_n: usize,
    width: usize,
    gamma: f64,
}

impl GridParams {
    pub fn new(n_modes: usize, sigma: f64, width: usize, gamma: f64) -> Result<Self> {
        if n_modes < 2 || n_modes % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "mode count N must be even and >= 2, got {n_modes}"
            )));
        }
        if !(sigma > 1.0) || !sigma.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "upsampling factor sigma must exceed 1, got {sigma}"
            )));
        }
        if width < 2 {
            return Err(Error::InvalidParameter(format!(
                "kernel width must be >= 2, got {width}"
            )));
        }
        if !(gamma > 0.0 && gamma <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "safety factor gamma must lie in (0, 1], got {gamma}"
            )));
        }
        let target = (sigma * n_modes as f64 - 1e-9).ceil() as usize;
        let fine_n = next_even_five_smooth(target);
        if width >= fine_n / 2 {
            return Err(Error::InvalidParameter(format!(
                "kernel width {width} must be smaller than half the fine grid n = {fine_n}"
            )));
        }
        Ok(GridParams {
            n_modes,
            sigma: fine_n as f64 / n_modes as f64,
            fine_n,
            width,
            gamma,
        })
    }

    /// Requested output mode count N.
    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    /// Effective upsampling factor n/N.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Fine-grid size n (even, 5-smooth).
    pub fn fine_n(&self) -> usize {
        self.fine_n
    }

    /// Kernel width w in fine-grid points.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Scaled-kernel half-width alpha = pi w / n.
    pub fn alpha(&self) -> f64 {
        PI * self.width as f64 / self.fine_n as f64
    }

    /// Fine-grid spacing h = 2 pi / n.
    pub fn spacing(&self) -> f64 {
        2.0 * PI / self.fine_n as f64
    }
}

/// Evaluate the 2 pi periodization of the scaled kernel
/// psi(x) = phi(n x / (pi w)) at any real x.
///
/// With scaled support 2 alpha < 2 pi at most two images overlap; all
/// overlapping images are summed.
pub fn periodized_scaled_eval(spec: &KernelSpec, grid: &GridParams, x: f64) -> f64 {
    let folded = fold_angle(x);
    let scale = grid.fine_n as f64 / (PI * grid.width as f64);
    let mut sum = 0.0;
    for m in [-1.0, 0.0, 1.0] {
        sum += kernel_eval(spec, scale * (folded - 2.0 * PI * m));
    }
    sum
}

/// Fold a real angle into [-pi, pi).
pub(crate) fn fold_angle(x: f64) -> f64 {
    let t = (x + PI) / (2.0 * PI);
    x - 2.0 * PI * t.floor()
}

/// KB large-beta asymptotic: exp(beta (sqrt(1-z^2)-1)) / (1-z^2)^{1/4}.
///
/// The prefactor is singular at |z| = 1, which is outside the domain.
pub fn kb_asymptotic_eval(beta: f64, z: f64) -> Result<f64> {
    if z.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "KB asymptotic form requires |z| < 1, got {z}"
        )));
    }
    let one_minus = 1.0 - z * z;
    Ok((beta * (one_minus.sqrt() - 1.0)).exp() / one_minus.powf(0.25))
}

/// Outer branch of the Slepian PSWF asymptotic, normalized to continue to 1
/// at z -> 0: sqrt(2) e^{beta(s-1)} (1-z^2)^{-1/4} (1+s)^{-1/2}, s = sqrt(1-z^2).
fn slepian_outer(beta: f64, z: f64) -> f64 {
    let one_minus = 1.0 - z * z;
    let s = one_minus.max(0.0).sqrt();
    std::f64::consts::SQRT_2 * (beta * (s - 1.0)).exp() / one_minus.powf(0.25) / (1.0 + s).sqrt()
}

/// Edge branch: C I0(beta s) with the constant anchored so the branch meets
/// the outer form at the seam |z| = 1 - 1/beta up to the I0 asymptotic error.
fn slepian_edge(beta: f64, z: f64) -> f64 {
    let s = (1.0 - z * z).max(0.0).sqrt();
    let z_seam = 1.0 - 1.0 / beta;
    let s_seam = (1.0 - z_seam * z_seam).sqrt();
    std::f64::consts::SQRT_2 / bessel_i0(beta) / (1.0 + s_seam).sqrt() * bessel_i0(beta * s)
}

/// Piecewise Slepian large-beta asymptotic for the order-zero PSWF,
/// normalized so the outer branch tends to 1 as z -> 0.
///
/// For beta^{-1/2} <= |z| <= 1 - 1/beta the outer (saddle-type) form is used;
/// for 1 - 1/beta <= |z| <= 1 the Bessel edge form. Arguments with
/// |z| < beta^{-1/2} are out of branch (the hybrid form of `sleph_eval`
/// covers the center).
pub fn slepian_asymptotic_eval(beta: f64, z: f64) -> Result<f64> {
    if beta < 1.0 {
        return Err(Error::InvalidParameter(format!(
            "Slepian asymptotic requires beta >= 1, got {beta}"
        )));
    }
    let az = z.abs();
    if az > 1.0 {
        return Err(Error::Domain(format!(
            "Slepian asymptotic requires |z| <= 1, got {z}"
        )));
    }
    if az < 1.0 / beta.sqrt() {
        return Err(Error::Domain(format!(
            "|z| = {az} is below the outer-branch floor beta^(-1/2); use the hybrid form"
        )));
    }
    if az < 1.0 - 1.0 / beta {
        Ok(slepian_outer(beta, az))
    } else {
        Ok(slepian_edge(beta, az))
    }
}

/// Hybrid PSWF approximation sqrt(2)/I0(beta) * I0(beta s) (1+s)^{-1/2},
/// normalized to 1 at z = 0; valid on all of [-1, 1].
pub fn sleph_eval(beta: f64, z: f64) -> f64 {
    let s = (1.0 - (z * z).min(1.0)).max(0.0).sqrt();
    std::f64::consts::SQRT_2 / bessel_i0(beta) * bessel_i0(beta * s) / (1.0 + s).sqrt()
}
