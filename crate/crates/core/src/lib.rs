//! Numerical toolkit around the Riemann-Siegel function Z(t): evaluation
//! with derivatives, critical-line zero location and storage, zero-sum
//! identities for the logarithmic derivative, and a cosmological model
//! driven by R(t) = |Z(t)|, plus empirical probes of classical bounds.

pub mod bounds_lab;
pub mod cosmology;
pub mod dd;
mod error;
pub mod explicit_formula;
pub mod gamma;
pub mod riemann_siegel;
pub mod zero_engine;

pub use bounds_lab::{
    littlewood_gap_stat, moser_assumption_probe, omega_probe, GapStatistic, MoserReport,
    OmegaRecord, RecordKind,
};
pub use cosmology::{
    band_fraction_over_midpoints, density, friedmann_residuals, p_plus_c2rho,
    positive_pressure_interval, positivity_scan, pressure, state_equation_check,
    triple_log_threshold, BandScanSummary, ConstantName, CosmoState, Direction, EmpiricalConstant,
    IntervalResult, PhysicalConstants, StateEquationReport,
};
pub use error::{Error, Result};
pub use explicit_formula::{
    first_identity_residual, log_deriv_zeta, second_identity_residual, zero_sum,
    FirstIdentityResidual, SecondIdentityResult, SignConvention, ZeroSumResult,
};
pub use zero_engine::{
    find_stationary_points, find_zeros, gap_midpoints, ingest_zero_table, read_cached_table,
    verify_against, write_table, CachedTable, CriticalPoint, PointKind, TableSource, VerifyReport,
    ZeroTable,
};
pub use riemann_siegel::{
    chi, gram_index_at_or_above, gram_point, next_gram, theta, theta_mod_2pi, z_eval,
    zeta_line_full, zeta_on_line, EvalConfig, EvalPath, LineZeta, ZetaPoint,
};
