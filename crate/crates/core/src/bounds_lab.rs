//! Empirical probes of the classical growth and gap bounds that the
//! model construction leans on: the triple-log gap bound for consecutive
//! zero ordinates, Omega-type lower bounds for |Z| along running maxima,
//! and the (unproven) existence of stationary points with large |Z|.
//!
//! These bounds are asymptotic with unspecified constants, so nothing
//! here asserts them; the probes measure finite-range suprema and report.

use rayon::prelude::*;

use crate::cosmology::{ConstantName, Direction, EmpiricalConstant};
use crate::error::{Error, Result};
use crate::riemann_siegel::{z_eval, EvalConfig};
use crate::zero_engine::{CriticalPoint, PointKind, ZeroTable};

/// Gaps below this ordinate carry no normalized statistic: the triple
/// logarithm is only comfortably positive above it.
const GAP_STAT_MIN: f64 = 16.0;

/// Default grid step of the Omega scans: below the smallest zero gap at
/// these heights, so maxima between zeros are not missed grossly.
const OMEGA_GRID_STEP: f64 = 0.05;

/// Refinement factor around running-maximum records.
const OMEGA_REFINE: usize = 8;

/// One consecutive-ordinate gap with its triple-log normalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapStatistic {
    pub gamma_lo: f64,
    pub gamma_hi: f64,
    /// gamma_hi - gamma_lo.
    pub gap: f64,
    /// gap * log log log gamma_lo, defined only for gamma_lo > 16 where
    /// the factor is positive.
    pub normalized: Option<f64>,
}

/// Where an Omega record was observed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    Grid,
    Stationary,
}

impl std::fmt::Display for RecordKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RecordKind::Grid => "grid",
            RecordKind::Stationary => "stationary",
        })
    }
}

/// A running-maximum record of |Z|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaRecord {
    pub t: f64,
    pub abs_z: f64,
    pub kind: RecordKind,
    /// The exponent beta with |Z| = exp(log^beta t), i.e.
    /// log log |Z| / log log t; defined when |Z| > 1 and t > e.
    pub implied_beta: Option<f64>,
    /// Whether |Z| > a2 exp(log^beta t) at the probe's parameters.
    pub exceeds_omega_bound: bool,
    /// Whether |Z| > 1/t (the alpha = 1 case of the reciprocal-power
    /// form; stated as equivalent to the exponential form but not
    /// algebraically so — reported separately).
    pub exceeds_alpha_form: bool,
}

/// Summary of the stationary-point probe.
#[derive(Debug, Clone, PartialEq)]
pub struct MoserReport {
    /// Stationary points examined.
    pub total: usize,
    /// How many exceed a2 exp(log^beta t).
    pub count_exceeding: usize,
    /// The exceeding points as records.
    pub exceeding: Vec<OmegaRecord>,
    /// Largest |Z| over all examined stationary points.
    pub largest: Option<OmegaRecord>,
    pub fraction: f64,
}

fn triple_log(t: f64) -> f64 {
    t.ln().ln().ln()
}

fn implied_beta(t: f64, abs_z: f64) -> Option<f64> {
    if abs_z > 1.0 && t > std::f64::consts::E {
        Some(abs_z.ln().ln() / t.ln().ln())
    } else {
        None
    }
}

fn omega_bound(t: f64, beta: f64, a2: f64) -> f64 {
    a2 * t.ln().powf(beta).exp()
}

fn check_beta(op: &'static str, beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta < 0.5) {
        return Err(Error::domain(op, format!("beta must lie in (0, 1/2), got {beta}")));
    }
    Ok(())
}

fn make_record(t: f64, abs_z: f64, kind: RecordKind, beta: f64, a2: f64) -> OmegaRecord {
    OmegaRecord {
        t,
        abs_z,
        kind,
        implied_beta: implied_beta(t, abs_z),
        exceeds_omega_bound: abs_z > omega_bound(t, beta, a2),
        exceeds_alpha_form: abs_z > 1.0 / t,
    }
}

/// Consecutive-gap statistics of a zero table, and the supremum A of
/// gap * log log log gamma_lo over the gaps that carry the statistic.
pub fn littlewood_gap_stat(table: &ZeroTable) -> Result<(Vec<GapStatistic>, EmpiricalConstant)> {
    if table.len() < 2 {
        return Err(Error::domain(
            "littlewood_gap_stat",
            format!("need at least 2 ordinates, got {}", table.len()),
        ));
    }
    let stats: Vec<GapStatistic> = table
        .gaps()
        .map(|(lo, hi)| GapStatistic {
            gamma_lo: lo,
            gamma_hi: hi,
            gap: hi - lo,
            normalized: if lo > GAP_STAT_MIN { Some((hi - lo) * triple_log(lo)) } else { None },
        })
        .collect();
    let sup = stats
        .iter()
        .filter_map(|s| s.normalized)
        .fold(f64::NEG_INFINITY, f64::max);
    let first = table.ordinates()[0];
    let last = *table.ordinates().last().expect("nonempty");
    Ok((
        stats,
        EmpiricalConstant {
            name: ConstantName::A,
            value: sup,
            range_measured: (first, last),
            direction: Direction::Sup,
        },
    ))
}

/// Running-maximum records of |Z| on a grid over [t_lo, t_hi], each
/// refined on a finer local window, with the Omega-bound and
/// reciprocal-power flags evaluated at the probe parameters.
pub fn omega_probe(
    t_lo: f64,
    t_hi: f64,
    beta: f64,
    a2: f64,
    cfg: &EvalConfig,
) -> Result<Vec<OmegaRecord>> {
    check_beta("omega_probe", beta)?;
    cfg.validate()?;
    if !(t_lo > 0.0 && t_hi > t_lo) {
        return Err(Error::domain(
            "omega_probe",
            format!("need 0 < t_lo < t_hi, got [{t_lo}, {t_hi}]"),
        ));
    }
    let steps = ((t_hi - t_lo) / OMEGA_GRID_STEP).ceil() as usize + 1;
    let grid: Vec<(f64, f64)> = (0..steps)
        .into_par_iter()
        .map(|i| {
            let t = (t_lo + i as f64 * OMEGA_GRID_STEP).min(t_hi);
            z_eval(t, cfg).map(|p| (t, p.z.abs()))
        })
        .collect::<Result<_>>()?;

    // sequential running-max pass over the ordered grid
    let mut raw: Vec<(f64, f64)> = Vec::new();
    let mut best = f64::NEG_INFINITY;
    for &(t, az) in &grid {
        if az > best {
            best = az;
            raw.push((t, az));
        }
    }

    // refine each record on a local window, then restore strict
    // monotonicity (refinement can reorder near-ties)
    let refined: Vec<(f64, f64)> = raw
        .par_iter()
        .map(|&(t, az)| {
            let half = OMEGA_GRID_STEP;
            let n = 2 * OMEGA_REFINE;
            let mut best = (t, az);
            for i in 0..=n {
                let x = (t - half + i as f64 * (2.0 * half) / n as f64).clamp(t_lo, t_hi);
                let z = z_eval(x, cfg)?.z.abs();
                if z > best.1 {
                    best = (x, z);
                }
            }
            Ok(best)
        })
        .collect::<Result<_>>()?;
    let mut records = Vec::with_capacity(refined.len());
    let mut best = f64::NEG_INFINITY;
    for (t, az) in refined {
        if az > best {
            best = az;
            records.push(make_record(t, az, RecordKind::Grid, beta, a2));
        }
    }
    Ok(records)
}

/// Among refined stationary points of Z, report those whose |Z| exceeds
/// a2 exp(log^beta t) — the subsequence whose existence the model's
/// construction assumes. No assertion is made either way.
pub fn moser_assumption_probe(
    stationary: &[CriticalPoint],
    beta: f64,
    a2: f64,
) -> Result<MoserReport> {
    check_beta("moser_assumption_probe", beta)?;
    let points: Vec<&CriticalPoint> = stationary
        .iter()
        .filter(|p| matches!(p.kind, PointKind::Stationary))
        .collect();
    let records: Vec<OmegaRecord> = points
        .iter()
        .map(|p| make_record(p.t0, p.z_at.abs(), RecordKind::Stationary, beta, a2))
        .collect();
    let exceeding: Vec<OmegaRecord> =
        records.iter().copied().filter(|r| r.exceeds_omega_bound).collect();
    let largest = records
        .iter()
        .copied()
        .max_by(|a, b| a.abs_z.total_cmp(&b.abs_z));
    let total = records.len();
    let count_exceeding = exceeding.len();
    Ok(MoserReport {
        total,
        count_exceeding,
        exceeding,
        largest,
        fraction: if total == 0 { 0.0 } else { count_exceeding as f64 / total as f64 },
    })
}
