//! 1D nonuniform fast Fourier transform (types 1 and 2) built on the
//! exponential-of-semicircle spreading kernel, together with the numerical
//! analysis toolkit that backs it: kernel Fourier-transform asymptotics,
//! aliasing-error estimation, phased sinc-sum checks, and a desk-scale
//! prolate spheroidal wave function solver for kernel comparisons.
//!
//! The transform pipeline is the classic spread / FFT / deconvolve scheme on
//! an upsampled fine grid. Exact direct summation oracles and error
//! estimators live alongside the fast path so that every accuracy claim can
//! be checked numerically.

pub mod aliasing;
pub mod fftcore;
pub mod kernels;
pub mod ktransform;
pub mod nufft;
pub mod pswf;
pub mod specfun;

pub use aliasing::{
    eps_inf_estimate, es_rate, g_k, kb_error_bound, phased_sinc_sum, quadrature_sinc_gap,
    AliasingReport,
};
pub use fftcore::{dft_forward, dft_inverse, is_five_smooth, next_even_five_smooth, DftPlan};
pub use kernels::{
    beta_from, kb_asymptotic_eval, kernel_eval, periodized_scaled_eval, sleph_eval,
    slepian_asymptotic_eval, GridParams, KernelFamily, KernelSpec,
};
pub use ktransform::{
    es_ft_above_cutoff, es_ft_below_cutoff, es_ft_deviation, es_ft_sinc_tail, es_ft_tail_bound,
    ft_quadrature, kb_ft_analytic, SpectrumSample,
};
pub use nufft::{
    direct_type1, direct_type2, interp, make_plan, spread, type1, type2, NuPoints, Plan,
    WidthRequest,
};
pub use pswf::{pswf_eval, pswf_mu0, pswf_solve, pswf_solve_with_basis, PswfResult};
pub use specfun::{bessel_i0, gauss_legendre, sinc, QuadratureRule};

/// Errors reported by the library.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("argument outside the operation's domain: {0}")]
    Domain(String),
    #[error("unsupported transform size {0}: prime factors must lie in {{2, 3, 5}}")]
    UnsupportedSize(usize),
    #[error("input length mismatch: {0}")]
    InvalidInput(String),
    #[error("frequency too large for quadrature (|xi| = {0:.3e}); use asymptotics or bounds")]
    FrequencyTooLarge(f64),
    #[error("truncation insufficient: {0}")]
    TruncationInsufficient(String),
    #[error("internal numerical inconsistency: {0}")]
    NumericalInconsistency(String),
    #[error("iteration failed to converge: {0}")]
    ConvergenceFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
