//! The sum over zeros S(t) = sum_gamma 1/(t-gamma)^2 (both signs of every
//! ordinate) with a controlled truncation tail, and numerical verification
//! of the two identities that connect it to Z and zeta:
//!
//! * first identity ("second log-derivative of Z"):
//!     sum over all zeros = -(d/dt)(Z'/Z)(t) + O(1/t)
//! * second identity ("second log-derivative of zeta"):
//!     zeta''/zeta(1/2+it) = sigma * sum + (zeta'/zeta)^2 + O(1/t),
//!   where the sign sigma is resolved empirically by evaluating both
//!   candidates (see [`SecondIdentityResult`]).
//!
//! Truncation: the sum runs over ordinates up to h_cut >= 2t; the rest is
//! estimated by integrating the smooth zero density (1/2pi) log(u/2pi)
//! against the summand. Keeping h_cut >= 2t keeps |t-u| >= t inside the
//! tail, so local fluctuations of the zero counting function contribute
//! only at the next order.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::riemann_siegel::{z_eval, zeta_line_full, EvalConfig};
use crate::zero_engine::ZeroTable;

/// Minimum allowed distance from t to a zero for the bare sum.
const ZERO_GUARD: f64 = 1e-6;

/// Admissibility guard for the identity checks (the 1/(t-gamma)^2 term
/// must stay small enough that both sides are O(1)-conditioned).
const IDENTITY_GUARD: f64 = 0.05;

/// log-substitution span for the tail integral: u = h_cut * e^w over
/// [0, W]; the integrand decays like w e^{-w}, so W = 45 puts the cutoff
/// error far below f64 resolution.
const TAIL_LOG_SPAN: f64 = 45.0;

/// Absolute tolerance of the tail quadrature.
const TAIL_TOL: f64 = 1e-13;

/// Truncated zero sum with its analytic tail estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroSumResult {
    pub t: f64,
    /// Truncation height.
    pub h_cut: f64,
    /// Sum over 0 < gamma <= h_cut of 1/(t-gamma)^2 + 1/(t+gamma)^2.
    pub partial: f64,
    /// Density-integral estimate of the remainder above h_cut.
    pub tail: f64,
    /// partial + tail.
    pub total: f64,
    /// Distance from t to the nearest tabulated zero.
    pub nearest_gap_distance: f64,
}

/// Two sides of one of the residual identities at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstIdentityResidual {
    pub t: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// lhs - rhs.
    pub residual: f64,
    /// The scale 1/t that the residual is expected to track.
    pub bound_scale: f64,
}

/// Candidate sign in front of the zero sum in the zeta''/zeta identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    Plus,
    Minus,
}

impl std::fmt::Display for SignConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SignConvention::Plus => "plus",
            SignConvention::Minus => "minus",
        })
    }
}

/// Both-convention evaluation of the zeta''/zeta identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondIdentityResult {
    pub t: f64,
    /// zeta''/zeta(1/2+it) from oracle finite differences.
    pub lhs: Complex64,
    /// Zero-sum total entering the right-hand side.
    pub sum_total: f64,
    /// (zeta'/zeta)^2 entering the right-hand side.
    pub log_deriv_sq: Complex64,
    /// |lhs - (+sum + (zeta'/zeta)^2)|.
    pub residual_plus: f64,
    /// |lhs - (-sum + (zeta'/zeta)^2)|.
    pub residual_minus: f64,
    pub bound_scale: f64,
}

impl SecondIdentityResult {
    /// Right-hand side under a given sign convention.
    pub fn rhs(&self, convention: SignConvention) -> Complex64 {
        let s = match convention {
            SignConvention::Plus => self.sum_total,
            SignConvention::Minus => -self.sum_total,
        };
        self.log_deriv_sq + Complex64::new(s, 0.0)
    }

    pub fn residual(&self, convention: SignConvention) -> f64 {
        match convention {
            SignConvention::Plus => self.residual_plus,
            SignConvention::Minus => self.residual_minus,
        }
    }

    /// The convention with the smaller residual at this point.
    pub fn winner(&self) -> SignConvention {
        if self.residual_plus <= self.residual_minus {
            SignConvention::Plus
        } else {
            SignConvention::Minus
        }
    }
}

/// Truncated sum over zeros of 1/(t-gamma)^2 + 1/(t+gamma)^2 plus the
/// density tail above `h_cut`.
pub fn zero_sum(t: f64, table: &ZeroTable, h_cut: f64) -> Result<ZeroSumResult> {
    let two_pi = 2.0 * std::f64::consts::PI;
    if !(t > 0.0) {
        return Err(Error::domain("zero_sum", format!("t must be positive, got {t}")));
    }
    if h_cut < 2.0 * t || h_cut <= two_pi {
        return Err(Error::domain(
            "zero_sum",
            format!("h_cut must satisfy h_cut >= 2t and h_cut > 2pi, got h_cut={h_cut}, t={t}"),
        ));
    }
    if h_cut > table.h_max() {
        return Err(Error::InsufficientTable { needed: h_cut, have: table.h_max() });
    }
    let nearest = table.nearest_distance(t);
    if nearest <= ZERO_GUARD {
        return Err(Error::TooCloseToZero { t, distance: nearest, guard: ZERO_GUARD });
    }

    let mut acc = crate::dd::Kahan::default();
    for &gamma in table.ordinates() {
        if gamma > h_cut {
            break;
        }
        let a = t - gamma;
        let b = t + gamma;
        acc.add(1.0 / (a * a) + 1.0 / (b * b));
    }
    let partial = acc.value();

    // tail: integral of (1/2pi) log(u/2pi) [ (t-u)^-2 + (t+u)^-2 ] du over
    // [h_cut, inf), with u = h_cut e^w
    let integrand = |w: f64| {
        let u = h_cut * w.exp();
        let du_dw = u;
        let density = (u / two_pi).ln() / two_pi;
        let a = t - u;
        let b = t + u;
        density * (1.0 / (a * a) + 1.0 / (b * b)) * du_dw
    };
    let tail = adaptive_simpson(&integrand, 0.0, TAIL_LOG_SPAN, TAIL_TOL);

    Ok(ZeroSumResult {
        t,
        h_cut,
        partial,
        tail,
        total: partial + tail,
        nearest_gap_distance: nearest,
    })
}

/// Both sides of the first identity at t: the zero sum (h_cut = 2|t|)
/// against -(d/dt)(Z'/Z) = (Z'^2 - Z'' Z)/Z^2, evaluated analytically.
pub fn first_identity_residual(
    t: f64,
    table: &ZeroTable,
    cfg: &EvalConfig,
) -> Result<FirstIdentityResidual> {
    cfg.validate()?;
    let ta = t.abs();
    let nearest = table.nearest_distance(ta);
    if nearest <= IDENTITY_GUARD {
        return Err(Error::TooCloseToZero { t: ta, distance: nearest, guard: IDENTITY_GUARD });
    }
    let sum = zero_sum(ta, table, 2.0 * ta)?;
    let p = z_eval(ta, cfg)?;
    let rhs = (p.dz * p.dz - p.d2z * p.z) / (p.z * p.z);
    let lhs = sum.total;
    Ok(FirstIdentityResidual { t: ta, lhs, rhs, residual: lhs - rhs, bound_scale: 1.0 / ta })
}

/// zeta'/zeta(1/2+it) from the exact relation to theta' and Z'/Z:
/// log zeta = log Z - i theta along the line, and d/ds = -i d/dt, so
/// zeta'/zeta = -theta'(t) - i Z'(t)/Z(t).
///
/// The proximity guard uses the Newton estimate |Z|/max(|Z'|, 0.1) for
/// the distance to the nearest zero, so no table is needed.
pub fn log_deriv_zeta(t: f64, cfg: &EvalConfig) -> Result<Complex64> {
    let p = z_eval(t, cfg)?;
    let distance = p.z.abs() / p.dz.abs().max(0.1);
    if distance <= ZERO_GUARD {
        return Err(Error::TooCloseToZero { t, distance, guard: ZERO_GUARD });
    }
    Ok(Complex64::new(-p.dtheta, -p.dz / p.z))
}

/// Both sides of the second identity at t, under both sign conventions.
///
/// The left side zeta''/zeta comes from five-point second differences of
/// zeta along the line with one Richardson step (d^2/ds^2 = -d^2/dt^2);
/// the right side combines the zero sum (h_cut = 2|t|) with the exact
/// (zeta'/zeta)^2.
pub fn second_identity_residual(
    t: f64,
    table: &ZeroTable,
    cfg: &EvalConfig,
) -> Result<SecondIdentityResult> {
    cfg.validate()?;
    let ta = t.abs();
    let nearest = table.nearest_distance(ta);
    if nearest <= IDENTITY_GUARD {
        return Err(Error::TooCloseToZero { t: ta, distance: nearest, guard: IDENTITY_GUARD });
    }
    let sum = zero_sum(ta, table, 2.0 * ta)?;
    let zc = zeta_line_full(ta, cfg).zeta;

    // g''(t) by the 5-point stencil at steps h and h/2, Richardson-combined
    let h = 1e-3 * nearest.min(1.0) * cfg.fd_step_scale;
    let second_diff = |h: f64| {
        let f = |dt: f64| zeta_line_full(ta + dt, cfg).zeta;
        (-f(-2.0 * h) + 16.0 * f(-h) - 30.0 * zc + 16.0 * f(h) - f(2.0 * h))
            / Complex64::new(12.0 * h * h, 0.0)
    };
    let d_h = second_diff(h);
    let d_h2 = second_diff(0.5 * h);
    let g2 = (d_h2 * 16.0 - d_h) / 15.0;
    let lhs = -g2 / zc; // zeta''(s) = -g''(t)

    let ld = log_deriv_zeta(ta, cfg)?;
    let log_deriv_sq = ld * ld;
    let plus = log_deriv_sq + Complex64::new(sum.total, 0.0);
    let minus = log_deriv_sq - Complex64::new(sum.total, 0.0);
    Ok(SecondIdentityResult {
        t: ta,
        lhs,
        sum_total: sum.total,
        log_deriv_sq,
        residual_plus: (lhs - plus).norm(),
        residual_minus: (lhs - minus).norm(),
        bound_scale: 1.0 / ta,
    })
}

/// Adaptive Simpson quadrature with an absolute tolerance. The range is
/// pre-split into eight panels so an oscillation-free-looking coarse pass
/// cannot fake convergence.
fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let n0 = 8;
    let step = (b - a) / n0 as f64;
    let mut total = 0.0;
    for i in 0..n0 {
        let lo = a + i as f64 * step;
        let hi = if i == n0 - 1 { b } else { lo + step };
        let m = 0.5 * (lo + hi);
        let (flo, fm, fhi) = (f(lo), f(m), f(hi));
        let whole = simpson(lo, hi, flo, fm, fhi);
        total += simpson_rec(f, lo, hi, flo, fm, fhi, whole, tol / n0 as f64, 28);
    }
    total
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}
