//! Minimal in-place radix-2 FFT used by the 1/f noise synthesizer.
//!
//! The synthesizer only ever transforms power-of-two lengths, so the
//! textbook iterative Cooley–Tukey form is all that is needed here; twiddle
//! factors are computed directly per butterfly to keep rounding error flat
//! across the transform.

use crate::math;

/// In-place transform of `(re, im)`; lengths must be equal and a power of
/// two. The inverse transform includes the 1/n scaling.
pub(crate) fn fft_in_place(re: &mut [f64], im: &mut [f64], inverse: bool) {
    let n = re.len();
    debug_assert_eq!(n, im.len());
    debug_assert!(n.is_power_of_two());
    if n < 2 {
        return;
    }

    // Bit-reversal permutation.
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            re.swap(i, j);
            im.swap(i, j);
        }
    }

    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2usize;
    while len <= n {
        let half = len / 2;
        let step = sign * 2.0 * core::f64::consts::PI / len as f64;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let angle = step * k as f64;
                let (wr, wi) = (math::cos(angle), math::sin(angle));
                let (er, ei) = (re[start + k], im[start + k]);
                let (xr, xi) = (re[start + k + half], im[start + k + half]);
                let or = xr * wr - xi * wi;
                let oi = xr * wi + xi * wr;
                re[start + k] = er + or;
                im[start + k] = ei + oi;
                re[start + k + half] = er - or;
                im[start + k + half] = ei - oi;
            }
        }
        len <<= 1;
    }

    if inverse {
        let scale = 1.0 / n as f64;
        for v in re.iter_mut() {
            *v *= scale;
        }
        for v in im.iter_mut() {
            *v *= scale;
        }
    }
}
