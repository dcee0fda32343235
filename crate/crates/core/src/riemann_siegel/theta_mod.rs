//! The phase function theta(t) with first and second derivatives, plus
//! Gram points (solutions of theta(g) = n*pi).
//!
//! theta(t) = Im log Gamma(1/4 + it/2) - (t/2) ln pi, taken on the branch
//! that is continuous in t with theta(0) = 0. Below |t| = 30 this is
//! evaluated directly from log-Gamma; above, by the Stirling-type series
//!
//!   theta(t) = (t/2) ln(t/2pi) - t/2 - pi/8
//!            + 1/(48t) + 7/(5760 t^3) + 31/(80640 t^5) + 127/(430080 t^7)
//!
//! whose error at the switchover is ~2e-17, far below every tolerance here.

use num_complex::Complex64;

use crate::dd::{self, Dd};
use crate::gamma;

/// Switchover between the log-Gamma path and the asymptotic series.
const THETA_ASYM_MIN: f64 = 30.0;

const LN_PI: f64 = 1.144_729_885_849_400_2;
const PI_OVER_8: f64 = std::f64::consts::FRAC_PI_8;

/// theta(t), theta'(t), theta''(t).
///
/// Negative t is routed through the exact odd/even/odd symmetry so that
/// theta(-t) == -theta(t) holds bit for bit.
pub fn theta(t: f64) -> (f64, f64, f64) {
    if t < 0.0 {
        let (v, d1, d2) = theta(-t);
        return (-v, d1, -d2);
    }
    if t <= THETA_ASYM_MIN {
        let z = Complex64::new(0.25, 0.5 * t);
        let v = gamma::lgamma(z).im - 0.5 * t * LN_PI;
        let d1 = 0.5 * gamma::digamma(z).re - 0.5 * LN_PI;
        let d2 = -0.25 * gamma::trigamma(z).im;
        (v, d1, d2)
    } else {
        (theta_asym_dd(t).to_f64(), dtheta_asym(t), d2theta_asym(t))
    }
}

/// theta(t) reduced modulo 2*pi into [-pi, pi], carrying double-double
/// precision through the large (t/2) ln(t/2pi) product so the phase of
/// e^{i theta} stays accurate to ~1e-12 rad even at t = 1e5.
pub fn theta_mod_2pi(t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    if t <= THETA_ASYM_MIN {
        // |theta| <= 8.1 here; no reduction needed
        theta(t).0
    } else {
        dd::reduce_mod_2pi(theta_asym_dd(t))
    }
}

/// Asymptotic theta as a double-double.
fn theta_asym_dd(t: f64) -> Dd {
    let half_t = 0.5 * t; // exact
    let ln_term = dd::dd_ln(t).sub(dd::LN_2PI);
    let main = ln_term.mul_f64(half_t);
    let t2 = t * t;
    let corr = -PI_OVER_8
        + (1.0 / 48.0
            + (7.0 / 5760.0 + (31.0 / 80640.0 + 127.0 / (430080.0 * t2)) / t2) / t2)
            / t;
    main.add_f64(-half_t).add_f64(corr)
}

fn dtheta_asym(t: f64) -> f64 {
    let t2 = t * t;
    0.5 * (t.ln() - dd::LN_2PI.hi)
        - (1.0 / 48.0 + (7.0 / 1920.0 + 31.0 / (16128.0 * t2)) / t2) / t2
}

fn d2theta_asym(t: f64) -> f64 {
    let t2 = t * t;
    (0.5 + (1.0 / 24.0 + (7.0 / 480.0 + 31.0 / (2688.0 * t2)) / t2) / t2) / t
}

/// The n-th Gram point: the unique solution of theta(g) = n*pi with g > 7.
///
/// theta is strictly increasing past its minimum near t = 6.6, so Newton
/// from a density-based initial guess converges in a handful of steps.
pub fn gram_point(n: u64) -> f64 {
    let target = n as f64 * std::f64::consts::PI;
    // crude but monotone-safe initial guess
    let mut g = if n < 4 {
        17.8 + 4.5 * n as f64
    } else {
        // invert the leading term (t/2)(ln(t/2pi) - 1) ~ n pi by iteration
        let mut t = 2.0 * std::f64::consts::PI * (n as f64 + 2.0) / (n as f64 + 2.0).ln();
        for _ in 0..8 {
            t = next_guess(t, target);
        }
        t
    };
    for _ in 0..40 {
        let (v, d1, _) = theta(g);
        let step = (v - target) / d1;
        g -= step;
        if g < 10.0 {
            g = 10.0;
        }
        if step.abs() <= 1e-13 * g.max(1.0) {
            break;
        }
    }
    g
}

/// One fixed-point refinement of the asymptotic inversion
/// t = 2pi exp(1 + (n pi + pi/8 + t/2) / (t/2 ln(t/2pi)) ... ) simplified to
/// a Newton step on the leading term.
fn next_guess(t: f64, target: f64) -> f64 {
    let f = 0.5 * t * ((t / (2.0 * std::f64::consts::PI)).ln() - 1.0) - PI_OVER_8 - target;
    let d = 0.5 * (t / (2.0 * std::f64::consts::PI)).ln();
    (t - f / d.max(0.05)).max(15.0)
}

/// Advance from Gram point g_n to g_{n+1} by Newton, using the local zero
/// density: the spacing is pi / theta'(g).
pub fn next_gram(g: f64) -> f64 {
    let (v0, d0, _) = theta(g);
    let target = v0 + std::f64::consts::PI;
    let mut x = g + std::f64::consts::PI / d0;
    for _ in 0..20 {
        let (v, d1, _) = theta(x);
        let step = (v - target) / d1;
        x -= step;
        if step.abs() <= 1e-13 * x {
            break;
        }
    }
    x
}

/// Gram index of the first Gram point >= t (theta(t)/pi rounded up).
pub fn gram_index_at_or_above(t: f64) -> u64 {
    let (v, _, _) = theta(t);
    let n = (v / std::f64::consts::PI).ceil();
    if n < 0.0 {
        0
    } else {
        let mut k = n as u64;
        // guard against the ceil landing one off right at a Gram point
        while gram_point(k) < t - 1e-9 {
            k += 1;
        }
        while k > 0 && gram_point(k - 1) >= t - 1e-9 {
            k -= 1;
        }
        k
    }
}
