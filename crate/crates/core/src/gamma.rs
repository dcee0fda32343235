//! Complex log-Gamma, digamma, and trigamma on the right half-plane.
//!
//! All three follow the same scheme: shift the argument up by an integer
//! until |z| is large enough for the Stirling asymptotic series, then undo
//! the shift with the exact recurrences. Arguments here always have
//! Re(z) > 0 (the theta machinery uses z = 1/4 + it/2), so no reflection
//! is needed and every intermediate log stays on the principal branch,
//! which makes Im(log Gamma) continuous in t with no winding bookkeeping.

use num_complex::Complex64;

/// |z| above which the 8-term Stirling tail is below 1e-19.
const STIRLING_RADIUS: f64 = 12.0;

/// B_{2k} / (2k (2k-1)) for k = 1..=8 — Stirling series for log Gamma.
const LGAMMA_COEF: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// B_{2k} / (2k) for k = 1..=8 — Stirling series for digamma.
const DIGAMMA_COEF: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

/// B_{2k} for k = 1..=8 — Stirling series for trigamma.
const TRIGAMMA_COEF: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

/// Integer shift that puts z + n outside the Stirling radius.
#[inline]
fn stirling_shift(z: Complex64) -> u32 {
    let im2 = z.im * z.im;
    if z.norm_sqr() >= STIRLING_RADIUS * STIRLING_RADIUS {
        0
    } else {
        let need = (STIRLING_RADIUS * STIRLING_RADIUS - im2).max(0.0).sqrt();
        ((need - z.re).max(0.0)).ceil() as u32
    }
}

/// Principal-branch log Gamma(z) for Re(z) > 0, continuous along vertical
/// lines in the right half-plane.
pub(crate) fn lgamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "lgamma requires Re(z) > 0, got {z}");
    let n = stirling_shift(z);
    let w = z + Complex64::new(n as f64, 0.0);
    // Stirling at w
    let lw = w.ln();
    let mut s = (w - 0.5) * lw - w + HALF_LN_2PI;
    let w2 = w * w;
    let mut invp = w.inv();
    for c in LGAMMA_COEF {
        s += c * invp;
        invp /= w2;
    }
    // undo the shift: log Gamma(z) = log Gamma(z+n) - sum log(z+j)
    for j in 0..n {
        s -= (z + Complex64::new(j as f64, 0.0)).ln();
    }
    s
}

/// Digamma psi(z) for Re(z) > 0.
pub(crate) fn digamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    let n = stirling_shift(z);
    let w = z + Complex64::new(n as f64, 0.0);
    let mut s = w.ln() - 0.5 * w.inv();
    let w2 = w * w;
    let mut invp = w2.inv();
    for c in DIGAMMA_COEF {
        s -= c * invp;
        invp /= w2;
    }
    // psi(z) = psi(z+n) - sum 1/(z+j)
    for j in 0..n {
        s -= (z + Complex64::new(j as f64, 0.0)).inv();
    }
    s
}

/// Trigamma psi'(z) for Re(z) > 0.
pub(crate) fn trigamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    let n = stirling_shift(z);
    let w = z + Complex64::new(n as f64, 0.0);
    let winv = w.inv();
    let w2inv = winv * winv;
    let mut s = winv + 0.5 * w2inv;
    let mut invp = winv * w2inv;
    for c in TRIGAMMA_COEF {
        s += c * invp;
        invp *= w2inv;
    }
    // psi'(z) = psi'(z+n) + sum 1/(z+j)^2
    for j in 0..n {
        let d = (z + Complex64::new(j as f64, 0.0)).inv();
        s += d * d;
    }
    s
}
