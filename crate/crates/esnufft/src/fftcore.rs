//! In-order complex DFTs for 5-smooth sizes.
//!
//! Sign convention: the forward transform is F_k = sum_l v_l e^{+2 pi i lk/n}
//! (matching the deconvolution step of the transform pipeline), and the
//! inverse carries the 1/n normalization so that inverse(forward(v)) = v.
//! The mixed-radix engine is provided by `rustfft` behind this contract;
//! correctness is pinned by direct-sum oracle tests.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::{Error, Result};

/// True when every prime factor of `n` lies in {2, 3, 5}.
pub fn is_five_smooth(mut n: usize) -> bool {
    if n == 0 {
        return false;
    }
    for p in [2usize, 3, 5] {
        while n % p == 0 {
            n /= p;
        }
    }
    n == 1
}

/// Smallest even 5-smooth integer >= `target`.
pub fn next_even_five_smooth(target: usize) -> usize {
    let mut n = target.max(2);
    if n % 2 == 1 {
        n += 1;
    }
    while !is_five_smooth(n) {
        n += 2;
    }
    n
}

/// Planned transforms for one size, reusable across calls.
pub struct DftPlan {
    size: usize,
    // rustfft's "inverse" is the unnormalized e^{+2 pi i lk/n} sum, which is
    // our forward convention; its "forward" provides our inverse after 1/n.
    plus: Arc<dyn Fft<f64>>,
    minus: Arc<dyn Fft<f64>>,
}

impl DftPlan {
    pub fn new(size: usize) -> Result<Self> {
        if !is_five_smooth(size) {
            return Err(Error::UnsupportedSize(size));
        }
        let mut planner = FftPlanner::new();
        Ok(DftPlan {
            size,
            plus: planner.plan_fft_inverse(size),
            minus: planner.plan_fft_forward(size),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// F_k = sum_l v_l e^{+2 pi i lk/n}, unnormalized.
    pub fn forward(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_len(v)?;
        let mut buf = v.to_vec();
        self.plus.process(&mut buf);
        Ok(buf)
    }

    /// Inverse with 1/n normalization: inverse(forward(v)) = v.
    pub fn inverse(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_len(v)?;
        let mut buf = v.to_vec();
        self.minus.process(&mut buf);
        let scale = 1.0 / self.size as f64;
        for z in &mut buf {
            *z *= scale;
        }
        Ok(buf)
    }

    fn check_len(&self, v: &[Complex64]) -> Result<()> {
        if v.len() != self.size {
            return Err(Error::InvalidInput(format!(
                "expected length {}, got {}",
                self.size,
                v.len()
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for DftPlan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DftPlan").field("size", &self.size).finish()
    }
}

/// One-shot forward DFT (positive exponent, unnormalized).
pub fn dft_forward(v: &[Complex64]) -> Result<Vec<Complex64>> {
    DftPlan::new(v.len())?.forward(v)
}

/// One-shot inverse DFT (negative exponent, 1/n normalization).
pub fn dft_inverse(v: &[Complex64]) -> Result<Vec<Complex64>> {
    DftPlan::new(v.len())?.inverse(v)
}
