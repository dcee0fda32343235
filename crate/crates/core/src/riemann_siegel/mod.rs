//! Evaluation of the Riemann-Siegel theta function, the unimodular factor
//! chi on the critical line, and the real function Z(t) with its first two
//! derivatives.
//!
//! Two evaluation paths are provided:
//!
//! * an Euler-Maclaurin path ("oracle"): slow, valid at every desk-scale
//!   height, with truncation error far below any tolerance used here;
//! * a Riemann-Siegel asymptotic path ("fast"): the main sum plus remainder
//!   corrections C0..C2, with a concrete error budget per height and order.
//!
//! `z_eval` picks a path per [`EvalConfig::path`]: `Auto` uses the fast path
//! only when its budget meets `target_abs_error` and otherwise falls back to
//! the oracle, while `RiemannSiegel` disables the fallback and reports
//! `AccuracyNotAttainable` when the budget is not met.
//!
//! Derivatives are always analytic (term-wise differentiation of the active
//! series); finite differences appear only in tests.

mod cheb_tables;
mod euler_maclaurin;
mod rs_formula;
mod theta_mod;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use euler_maclaurin::LineZeta;
pub use theta_mod::{gram_index_at_or_above, gram_point, next_gram, theta, theta_mod_2pi};

pub(crate) use rs_formula::{rs_budget, RS_MIN_T};

/// Which evaluation path `z_eval` may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalPath {
    /// Fast path when its budget meets the target, oracle otherwise.
    #[default]
    Auto,
    /// Always the Euler-Maclaurin oracle.
    EulerMaclaurin,
    /// Always the Riemann-Siegel fast path; errors when out of budget.
    RiemannSiegel,
}

/// Evaluation parameters shared by everything that computes Z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Absolute error target for Z (and for zeta on the line).
    pub target_abs_error: f64,
    /// Number of Bernoulli correction terms in the Euler-Maclaurin tail.
    pub em_terms: usize,
    /// Riemann-Siegel remainder order: 0, 1, or 2 (C0..C2).
    pub rs_correction_order: usize,
    /// Step multiplier for finite-difference validation code.
    pub fd_step_scale: f64,
    /// Path selection policy.
    pub path: EvalPath,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            target_abs_error: 1e-10,
            em_terms: 24,
            rs_correction_order: 0,
            fd_step_scale: 1.0,
            path: EvalPath::Auto,
        }
    }
}

impl EvalConfig {
    /// Check the configuration invariants.
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_error > 0.0) || !self.target_abs_error.is_finite() {
            return Err(Error::domain(
                "eval_config",
                format!("target_abs_error must be positive, got {}", self.target_abs_error),
            ));
        }
        if self.em_terms < 8 {
            return Err(Error::domain(
                "eval_config",
                format!("em_terms must be >= 8, got {}", self.em_terms),
            ));
        }
        if self.rs_correction_order > 2 {
            return Err(Error::domain(
                "eval_config",
                format!("rs_correction_order must be in 0..=2, got {}", self.rs_correction_order),
            ));
        }
        if !(self.fd_step_scale > 0.0) || !self.fd_step_scale.is_finite() {
            return Err(Error::domain(
                "eval_config",
                format!("fd_step_scale must be positive, got {}", self.fd_step_scale),
            ));
        }
        Ok(())
    }

    /// Stable hash of every field, used to detect stale cached artifacts.
    pub fn config_hash(&self) -> u64 {
        let canonical = format!(
            "target_abs_error={:e};em_terms={};rs_correction_order={};fd_step_scale={:e};path={:?}",
            self.target_abs_error, self.em_terms, self.rs_correction_order, self.fd_step_scale, self.path,
        );
        fnv1a64(canonical.as_bytes())
    }
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Z(t) together with its derivatives and the theta values at t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaPoint {
    pub t: f64,
    /// Z(t)
    pub z: f64,
    /// Z'(t)
    pub dz: f64,
    /// Z''(t)
    pub d2z: f64,
    /// theta(t), continuous branch
    pub theta: f64,
    /// theta'(t)
    pub dtheta: f64,
}

/// chi(1/2+it) = exp(-2i theta(t)): the unimodular factor of the functional
/// equation on the critical line. |chi| = 1 up to one rounding of sin/cos.
pub fn chi(t: f64) -> Complex64 {
    let m = theta_mod_2pi(t);
    let mut ph = -2.0 * m;
    let two_pi = 2.0 * std::f64::consts::PI;
    while ph > std::f64::consts::PI {
        ph -= two_pi;
    }
    while ph < -std::f64::consts::PI {
        ph += two_pi;
    }
    Complex64::from_polar(1.0, ph)
}

/// zeta(1/2+it) by the Euler-Maclaurin oracle. Truncation error is far
/// below `cfg.target_abs_error` at every supported height.
pub fn zeta_on_line(t: f64, cfg: &EvalConfig) -> Complex64 {
    zeta_line_full(t, cfg).zeta
}

/// zeta(1/2+it) with first and second s-derivatives (oracle path).
pub fn zeta_line_full(t: f64, cfg: &EvalConfig) -> LineZeta {
    let v = euler_maclaurin::zeta_line_em(t.abs(), cfg.em_terms);
    if t < 0.0 {
        // zeta(conj s) = conj zeta(s), and s(-t) = conj s(t)
        LineZeta {
            zeta: v.zeta.conj(),
            dzeta: v.dzeta.conj(),
            d2zeta: v.d2zeta.conj(),
        }
    } else {
        v
    }
}

/// Z(t), Z'(t), Z''(t) by the configured path.
///
/// Negative t is routed through the exact symmetries (Z even, Z' odd,
/// Z'' even, theta odd, theta' even), making them bit-exact.
pub fn z_eval(t: f64, cfg: &EvalConfig) -> Result<ZetaPoint> {
    cfg.validate()?;
    let ta = t.abs();
    let use_rs = match cfg.path {
        EvalPath::EulerMaclaurin => false,
        EvalPath::RiemannSiegel => {
            if ta < RS_MIN_T {
                return Err(Error::domain(
                    "z_eval",
                    format!("Riemann-Siegel path requires |t| >= {RS_MIN_T}, got {ta}"),
                ));
            }
            let budget = rs_budget(ta, cfg.rs_correction_order);
            if budget > cfg.target_abs_error {
                return Err(Error::AccuracyNotAttainable {
                    t,
                    budget,
                    target: cfg.target_abs_error,
                });
            }
            true
        }
        EvalPath::Auto => {
            ta > RS_MIN_T && rs_budget(ta, cfg.rs_correction_order) <= cfg.target_abs_error
        }
    };

    let (th, th1, th2) = theta(ta);
    let (z, dz, d2z) = if use_rs {
        let e = rs_formula::z_rs(ta, cfg.rs_correction_order);
        (e.z, e.dz, e.d2z)
    } else {
        let lz = euler_maclaurin::zeta_line_em(ta, cfg.em_terms);
        assemble_z(ta, th1, th2, &lz)
    };

    Ok(if t < 0.0 {
        ZetaPoint { t, z, dz: -dz, d2z, theta: -th, dtheta: th1 }
    } else {
        ZetaPoint { t, z, dz, d2z, theta: th, dtheta: th1 }
    })
}

/// Assemble Z and its t-derivatives from zeta and theta data at t >= 0.
///
/// With g(t) = zeta(1/2+it) and Z = Re(e^{i theta} g) (the imaginary part
/// vanishes identically):
///   Z'  = Re{e^{i theta} (i theta' g + g')},        g'  = i zeta_s
///   Z'' = Re{e^{i theta} ((i theta')^2 g + i theta'' g + 2 i theta' g' + g'')},
///                                                   g'' = -zeta_ss
fn assemble_z(t: f64, th1: f64, th2: f64, lz: &LineZeta) -> (f64, f64, f64) {
    let phase = theta_mod_2pi(t);
    let e = Complex64::from_polar(1.0, phase);
    let zc = lz.zeta;
    let z = (e * zc).re;
    // Z' = -Im{e^{i theta} (theta' zeta + zeta_s)}
    let dz = -(e * (th1 * zc + lz.dzeta)).im;
    // Z'' = Re{e^{i theta} (-theta'^2 zeta - 2 theta' zeta_s - zeta_ss + i theta'' zeta)}
    let inner = -th1 * th1 * zc - 2.0 * th1 * lz.dzeta - lz.d2zeta
        + Complex64::new(0.0, th2) * zc;
    let d2z = (e * inner).re;
    (z, dz, d2z)
}
