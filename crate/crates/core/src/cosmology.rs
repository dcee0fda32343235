//! Friedmann-equation cosmology driven by the postulate R(t) = |Z(t)|
//! with curvature k = +1: density, pressure, the combination p + c^2 rho,
//! scans for its triple-log lower bound, and positive-pressure intervals.
//!
//! All operations live on open zero-free intervals of Z, where |Z| is
//! smooth and R''/R = Z''/Z; points closer than 1e-6 to a zero are
//! rejected (the model's radius vanishes there and every quantity
//! diverges).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::explicit_formula::zero_sum;
use crate::riemann_siegel::{z_eval, EvalConfig, EvalPath, ZetaPoint};
use crate::zero_engine::ZeroTable;

/// Distance guard around zeros of Z.
const CUSP_GUARD: f64 = 1e-6;

/// Largest t with (log log log t)^2 undefined or zero: e^(e^1) = e^e.
pub const TRIPLE_LOG_MIN: f64 = 15.154262241479264;

/// Samples per positive-pressure interval check.
const INTERVAL_SAMPLES: usize = 64;

/// Bisection depth for the interval half-width search.
const INTERVAL_BISECT_ITERS: u32 = 40;

/// Model constants of the Friedmann system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Speed of light in model units.
    pub c: f64,
    /// Gravitational coupling in model units.
    pub g_coupling: f64,
    /// Curvature index, one of -1, 0, +1. The R(t) = |Z(t)| construction
    /// requires +1; only the generic residual evaluator accepts others.
    pub k: i8,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self { c: 1.0, g_coupling: 1.0, k: 1 }
    }
}

impl PhysicalConstants {
    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::domain("PhysicalConstants", format!("c must be positive, got {}", self.c)));
        }
        if !(self.g_coupling > 0.0 && self.g_coupling.is_finite()) {
            return Err(Error::domain(
                "PhysicalConstants",
                format!("g_coupling must be positive, got {}", self.g_coupling),
            ));
        }
        if ![-1, 0, 1].contains(&self.k) {
            return Err(Error::domain("PhysicalConstants", format!("k must be -1, 0 or +1, got {}", self.k)));
        }
        Ok(())
    }

    fn require_closed(&self) -> Result<()> {
        self.validate()?;
        if self.k != 1 {
            return Err(Error::domain(
                "cosmology",
                format!("the |Z| model requires curvature k = +1, got {}", self.k),
            ));
        }
        Ok(())
    }
}

/// Full model state at one admissible t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosmoState {
    pub t: f64,
    /// R(t) = |Z(t)|.
    pub r: f64,
    /// R'/R = Z'/Z (well defined away from zeros).
    pub dr_over_r: f64,
    /// Density rho(t) = (3/(G c^2)) [c^2/Z^2 + (Z'/Z)^2].
    pub rho: f64,
    /// Pressure p(t) = -2 Z''/(G Z) - c^2 rho / 3.
    pub p: f64,
    /// p + c^2 rho evaluated directly from the two fields above.
    pub p_plus_c2rho: f64,
    /// The alternative expression (2/G)[2 S - (1/c^2)(1/Z^2)] with S the
    /// zero sum; kept distinct because its curvature term disagrees in
    /// sign with direct algebra (which gives + c^2/Z^2).
    pub p_plus_c2rho_sum_form: f64,
    /// (log log log t)^2, defined for t > e^e.
    pub threshold: Option<f64>,
}

/// A symmetric interval of verified positive pressure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalResult {
    pub t0: f64,
    /// Half-width of the verified interval.
    pub delta: f64,
    /// Smallest sampled pressure on [t0-delta, t0+delta].
    pub p_min_on_interval: f64,
    /// (log log log t0)^2, or 0 when undefined.
    pub bound_value: f64,
}

/// Which measured constant a scan reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantName {
    A1,
    A2,
    A,
    C1,
}

impl std::fmt::Display for ConstantName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConstantName::A1 => "A1",
            ConstantName::A2 => "A2",
            ConstantName::A => "A",
            ConstantName::C1 => "C1",
        })
    }
}

/// Whether the constant is an infimum or a supremum over the range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Inf,
    Sup,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Inf => "inf",
            Direction::Sup => "sup",
        })
    }
}

/// A finite, range-tagged measurement standing in for one of the
/// unspecified absolute constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmpiricalConstant {
    pub name: ConstantName,
    pub value: f64,
    pub range_measured: (f64, f64),
    pub direction: Direction,
}

/// Band and positivity report for the state equation C1 rho < p <= c^2 rho/3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateEquationReport {
    pub t: f64,
    pub rho: f64,
    pub p: f64,
    /// C1 * rho, the lower edge of the band.
    pub band_lower: f64,
    /// c^2 rho / 3, the radiation-law upper edge.
    pub band_upper: f64,
    /// Whether band_lower < p <= band_upper.
    pub in_band: bool,
    /// p - c^2 rho / 3 (zero for a pure radiation law).
    pub radiation_residual: f64,
    pub rho_positive: bool,
    pub p_nonnegative: bool,
}

/// (log log log t)^2 with natural logarithms; None for t <= e^e where the
/// triple logarithm is nonpositive or undefined.
pub fn triple_log_threshold(t: f64) -> Option<f64> {
    if t > TRIPLE_LOG_MIN {
        let v = t.ln().ln().ln();
        Some(v * v)
    } else {
        None
    }
}

/// Evaluate Z with a proximity guard: the Newton estimate |Z|/max(|Z'|, 0.1)
/// for the distance to the nearest zero must exceed the cusp guard.
fn admissible_point(t: f64, cfg: &EvalConfig) -> Result<ZetaPoint> {
    let p = z_eval(t, cfg)?;
    let distance = p.z.abs() / p.dz.abs().max(0.1);
    if distance <= CUSP_GUARD {
        return Err(Error::AtZeroOfZ { t, distance });
    }
    Ok(p)
}

fn rho_from(pt: &ZetaPoint, constants: &PhysicalConstants) -> f64 {
    let c2 = constants.c * constants.c;
    let lr = pt.dz / pt.z;
    3.0 / (constants.g_coupling * c2) * (c2 / (pt.z * pt.z) + lr * lr)
}

fn pressure_from(pt: &ZetaPoint, constants: &PhysicalConstants) -> f64 {
    let c2 = constants.c * constants.c;
    -2.0 * pt.d2z / (constants.g_coupling * pt.z) - c2 / 3.0 * rho_from(pt, constants)
}

/// Density rho(t) = (3/(G c^2)) [c^2/Z^2 + (Z'/Z)^2]; requires k = +1.
pub fn density(t: f64, constants: &PhysicalConstants, cfg: &EvalConfig) -> Result<f64> {
    constants.require_closed()?;
    Ok(rho_from(&admissible_point(t, cfg)?, constants))
}

/// Pressure p(t) = -2 Z''/(G Z) - c^2 rho/3; requires k = +1. Identical,
/// as an algebraic identity, to the raw Friedmann form
/// -(1/G)[2 Z''/Z + (Z'/Z)^2 + c^2/Z^2].
pub fn pressure(t: f64, constants: &PhysicalConstants, cfg: &EvalConfig) -> Result<f64> {
    constants.require_closed()?;
    Ok(pressure_from(&admissible_point(t, cfg)?, constants))
}

/// Residuals of the two Friedmann equations at t for arbitrary curvature:
/// substituting R = |Z| and the implied (rho, p) back into
///   (R'/R)^2 + k c^2/R^2 - (G c^2/3) rho   and
///   2 R''/R + (R'/R)^2 + k c^2/R^2 + G p
/// must give zero up to rounding.
pub fn friedmann_residuals(
    t: f64,
    constants: &PhysicalConstants,
    cfg: &EvalConfig,
) -> Result<(f64, f64)> {
    constants.validate()?;
    let pt = admissible_point(t, cfg)?;
    let c2 = constants.c * constants.c;
    let g = constants.g_coupling;
    let k = constants.k as f64;
    let lr = pt.dz / pt.z;
    let curv = k * c2 / (pt.z * pt.z);
    // generic-k closure of the system
    let rho = 3.0 / (g * c2) * (curv + lr * lr);
    let p = -(2.0 * pt.d2z / pt.z + lr * lr + curv) / g;
    let res7 = lr * lr + curv - g * c2 / 3.0 * rho;
    let res8 = 2.0 * pt.d2z / pt.z + lr * lr + curv + g * p;
    Ok((res7, res8))
}

/// Full state at t, with both the direct p + c^2 rho and the alternative
/// zero-sum expression (cutoff 2t).
pub fn p_plus_c2rho(
    t: f64,
    constants: &PhysicalConstants,
    table: &ZeroTable,
    cfg: &EvalConfig,
) -> Result<CosmoState> {
    constants.require_closed()?;
    let distance = table.nearest_distance(t);
    if distance <= CUSP_GUARD {
        return Err(Error::AtZeroOfZ { t, distance });
    }
    let pt = admissible_point(t, cfg)?;
    let sum = zero_sum(t, table, 2.0 * t)?;
    let c2 = constants.c * constants.c;
    let g = constants.g_coupling;
    let rho = rho_from(&pt, constants);
    let p = pressure_from(&pt, constants);
    let sum_form = 2.0 / g * (2.0 * sum.total - 1.0 / (c2 * pt.z * pt.z));
    Ok(CosmoState {
        t,
        r: pt.z.abs(),
        dr_over_r: pt.dz / pt.z,
        rho,
        p,
        p_plus_c2rho: p + c2 * rho,
        p_plus_c2rho_sum_form: sum_form,
        threshold: triple_log_threshold(t),
    })
}

/// Evaluate p + c^2 rho at every gap midpoint in [t_lo, t_hi] and measure
/// A1 = inf of (p + c^2 rho) / (log log log t0)^2 over the scanned
/// midpoints. Positivity of p + c^2 rho at every midpoint is enforced.
pub fn positivity_scan(
    t_lo: f64,
    t_hi: f64,
    constants: &PhysicalConstants,
    table: &ZeroTable,
    cfg: &EvalConfig,
) -> Result<(Vec<CosmoState>, EmpiricalConstant)> {
    constants.require_closed()?;
    cfg.validate()?;
    if !(t_lo >= 16.0 && t_hi > t_lo) {
        return Err(Error::domain(
            "positivity_scan",
            format!("need 16 <= t_lo < t_hi so the triple-log threshold is positive, got [{t_lo}, {t_hi}]"),
        ));
    }
    if table.h_max() < 2.0 * t_hi {
        return Err(Error::InsufficientTable { needed: 2.0 * t_hi, have: table.h_max() });
    }
    let centers: Vec<f64> = table
        .gaps()
        .map(|(ga, gb)| 0.5 * (ga + gb))
        .filter(|&m| m >= t_lo && m <= t_hi)
        .collect();
    let states: Vec<CosmoState> = centers
        .par_iter()
        .map(|&m| p_plus_c2rho(m, constants, table, cfg))
        .collect::<Result<_>>()?;
    let mut a1 = f64::INFINITY;
    for s in &states {
        if s.p_plus_c2rho <= 0.0 {
            return Err(Error::PositivityViolated { t0: s.t, value: s.p_plus_c2rho });
        }
        if let Some(th) = s.threshold {
            if th > 0.0 {
                a1 = a1.min(s.p_plus_c2rho / th);
            }
        }
    }
    let constant = EmpiricalConstant {
        name: ConstantName::A1,
        value: a1,
        range_measured: (t_lo, t_hi),
        direction: Direction::Inf,
    };
    Ok((states, constant))
}

/// Largest verified half-width delta around t0 with p > 0 throughout
/// [t0 - delta, t0 + delta], capped at the distance to the enclosing
/// zeros. Sampling uses the caller's configuration; the three smallest
/// sampled pressures are re-verified with the slow evaluator, shrinking
/// delta by 10% on disagreement.
pub fn positive_pressure_interval(
    t0: f64,
    constants: &PhysicalConstants,
    table: &ZeroTable,
    cfg: &EvalConfig,
) -> Result<IntervalResult> {
    constants.require_closed()?;
    cfg.validate()?;
    if t0 >= table.h_max() {
        return Err(Error::InsufficientTable { needed: t0, have: table.h_max() });
    }
    let cap = table.nearest_distance(t0) * (1.0 - 1e-9);
    if cap <= CUSP_GUARD {
        return Err(Error::AtZeroOfZ { t: t0, distance: cap });
    }
    let p0 = pressure(t0, constants, cfg)?;
    if p0 <= 0.0 {
        return Err(Error::NotPositiveAtCenter { t0, p: p0 });
    }

    // smallest sampled pressure over the symmetric interval, or None if
    // any sample is inadmissible
    let sweep = |delta: f64, cfg: &EvalConfig| -> Option<(f64, Vec<(f64, f64)>)> {
        let mut samples = Vec::with_capacity(INTERVAL_SAMPLES);
        for i in 0..INTERVAL_SAMPLES {
            let x = i as f64 / (INTERVAL_SAMPLES - 1) as f64;
            let t = t0 - delta + 2.0 * delta * x;
            match pressure(t, constants, cfg) {
                Ok(p) => samples.push((t, p)),
                Err(_) => return None,
            }
        }
        let min = samples.iter().map(|&(_, p)| p).fold(f64::INFINITY, f64::min);
        Some((min, samples))
    };
    let positive = |delta: f64| matches!(sweep(delta, cfg), Some((min, _)) if min > 0.0);

    let mut delta = if positive(cap) {
        cap
    } else {
        let mut lo = 0.0f64;
        let mut hi = cap;
        for _ in 0..INTERVAL_BISECT_ITERS {
            let mid = 0.5 * (lo + hi);
            if positive(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-12 * t0.max(1.0) {
                break;
            }
        }
        lo
    };
    if delta <= 0.0 {
        return Err(Error::NotPositiveAtCenter { t0, p: p0 });
    }

    // oracle confirmation of the most marginal samples
    let slow = EvalConfig { path: EvalPath::EulerMaclaurin, ..*cfg };
    let mut p_min = f64::INFINITY;
    let mut confirmed = false;
    for _ in 0..20 {
        let Some((_, mut samples)) = sweep(delta, cfg) else {
            delta *= 0.9;
            continue;
        };
        samples.sort_by(|a, b| a.1.total_cmp(&b.1));
        let mut ok = true;
        p_min = f64::INFINITY;
        for (i, &(t, p)) in samples.iter().enumerate() {
            let value = if i < 3 { pressure(t, constants, &slow)? } else { p };
            if value <= 0.0 {
                ok = false;
                break;
            }
            p_min = p_min.min(value);
        }
        if ok {
            confirmed = true;
            break;
        }
        delta *= 0.9;
    }
    if !confirmed {
        return Err(Error::NotPositiveAtCenter { t0, p: p_min.min(0.0) });
    }

    Ok(IntervalResult {
        t0,
        delta,
        p_min_on_interval: p_min,
        bound_value: triple_log_threshold(t0).unwrap_or(0.0),
    })
}

fn band_holds(rho: f64, p: f64, c1: f64, c: f64) -> (f64, f64, bool) {
    let lower = c1 * rho;
    let upper = c * c * rho / 3.0;
    (lower, upper, lower < p && p <= upper)
}

/// Check the state-equation band C1 rho < p <= c^2 rho / 3 at t, along
/// with the radiation-law residual and the basic positivity constraints.
pub fn state_equation_check(
    t: f64,
    c1: f64,
    constants: &PhysicalConstants,
    cfg: &EvalConfig,
) -> Result<StateEquationReport> {
    constants.require_closed()?;
    if !(c1 > 0.0 && c1.is_finite()) {
        return Err(Error::domain("state_equation_check", format!("C1 must be positive, got {c1}")));
    }
    let pt = admissible_point(t, cfg)?;
    let rho = rho_from(&pt, constants);
    let p = pressure_from(&pt, constants);
    let (band_lower, band_upper, in_band) = band_holds(rho, p, c1, constants.c);
    Ok(StateEquationReport {
        t,
        rho,
        p,
        band_lower,
        band_upper,
        in_band,
        radiation_residual: p - band_upper,
        rho_positive: rho > 0.0,
        p_nonnegative: p >= 0.0,
    })
}

/// Scan-level summary of state_equation_check over gap midpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandScanSummary {
    pub total: usize,
    pub in_band: usize,
    pub fraction: f64,
}

/// Fraction of gap midpoints in [t_lo, t_hi] whose state sits inside the
/// band C1 rho < p <= c^2 rho / 3.
pub fn band_fraction_over_midpoints(
    t_lo: f64,
    t_hi: f64,
    c1: f64,
    constants: &PhysicalConstants,
    table: &ZeroTable,
    cfg: &EvalConfig,
) -> Result<(Vec<StateEquationReport>, BandScanSummary)> {
    let centers: Vec<f64> = table
        .gaps()
        .map(|(ga, gb)| 0.5 * (ga + gb))
        .filter(|&m| m >= t_lo && m <= t_hi)
        .collect();
    let reports: Vec<StateEquationReport> = centers
        .par_iter()
        .map(|&m| state_equation_check(m, c1, constants, cfg))
        .collect::<Result<_>>()?;
    let in_band = reports.iter().filter(|r| r.in_band).count();
    let summary = BandScanSummary {
        total: reports.len(),
        in_band,
        fraction: if reports.is_empty() { 0.0 } else { in_band as f64 / reports.len() as f64 },
    };
    Ok((reports, summary))
}
