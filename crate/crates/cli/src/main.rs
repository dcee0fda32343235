//! Command-line front end: evaluation, zero tables, identity checks,
//! cosmological scans, and bound probes, with deterministic CSV or JSON
//! reports on standard output (or `--out`) and progress notes on
//! standard error.

mod report;
mod tables;

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use report::{Cell, Format, Report};
use tables::acquire_table;
use zcosmo_core::{
    find_stationary_points, first_identity_residual, littlewood_gap_stat, moser_assumption_probe,
    omega_probe, positive_pressure_interval, positivity_scan, second_identity_residual, write_table,
    z_eval, EvalConfig, Error as CoreError, PhysicalConstants, PointKind, SignConvention, ZeroTable,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "zcosmo",
    version,
    about = "Riemann-Siegel Z toolkit: evaluation, zeros, zero-sum identities, and the |Z|-driven Friedmann model",
    after_help = "Reports are deterministic: one CSV header row plus data rows ordered by ascending t, \
twelve fractional digits, no timestamps. Summaries accompany JSON output and appear as '#' lines \
on standard error in CSV mode."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: FormatArg,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Zero-table file to ingest (one ascending ordinate per line).
    #[arg(long, global = true, value_name = "PATH")]
    zeros: Option<PathBuf>,

    /// Cache directory for computed zero tables.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Target absolute error of Z evaluation.
    #[arg(long = "abs-err", global = true, value_name = "VAL")]
    abs_err: Option<f64>,
}

#[derive(clap::Args, Debug)]
struct RangeArg {
    /// Height range LO HI.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], required = true, allow_hyphen_values = true)]
    range: Vec<f64>,
}

impl RangeArg {
    fn bounds(&self) -> Result<(f64, f64)> {
        parse_range(&self.range)
    }
}

fn parse_range(range: &[f64]) -> Result<(f64, f64)> {
    let (lo, hi) = (range[0], range[1]);
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        bail!("--range needs finite LO < HI, got {lo} {hi}");
    }
    Ok((lo, hi))
}

#[derive(clap::Args, Debug)]
struct ConstantsArg {
    /// Speed of light in model units.
    #[arg(long, default_value_t = 1.0)]
    c: f64,

    /// Gravitational coupling in model units.
    #[arg(long, default_value_t = 1.0)]
    g: f64,

    /// Curvature index (-1, 0, or +1; the model requires +1).
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    k: i8,
}

impl ConstantsArg {
    fn build(&self) -> Result<PhysicalConstants> {
        let constants = PhysicalConstants { c: self.c, g_coupling: self.g, k: self.k };
        constants.validate()?;
        Ok(constants)
    }
}

#[derive(clap::Args, Debug)]
struct OmegaArgs {
    /// Exponent beta in exp(log^beta t), 0 < beta < 1/2.
    #[arg(long, default_value_t = 0.25)]
    beta: f64,

    /// Prefactor of the growth bound.
    #[arg(long, default_value_t = 1.0)]
    a2: f64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate Z and its derivatives at one point.
    Eval {
        /// Evaluation point.
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// List zero ordinates in a range (computed, cached, or ingested).
    Zeros(RangeArg),
    /// Locate stationary points of Z between consecutive zeros.
    Stationary(RangeArg),
    /// Check both zero-sum identities at gap midpoints (or one point).
    VerifySums {
        /// Height range LO HI; identities are checked at gap midpoints.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
        range: Option<Vec<f64>>,
        /// Single test point instead of a range scan.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "range")]
        t: Option<f64>,
    },
    /// Friedmann state at every gap midpoint with the measured A1.
    CosmoScan {
        #[command(flatten)]
        range: RangeArg,
        #[command(flatten)]
        constants: ConstantsArg,
    },
    /// Positive-pressure intervals around gap midpoints.
    Intervals {
        #[command(flatten)]
        range: RangeArg,
        #[command(flatten)]
        constants: ConstantsArg,
    },
    /// Consecutive-gap statistics with the triple-log supremum.
    Gaps(RangeArg),
    /// Running-maximum records of |Z| with growth-bound flags.
    Omega {
        #[command(flatten)]
        range: RangeArg,
        #[command(flatten)]
        omega: OmegaArgs,
    },
    /// Stationary points exceeding the growth bound.
    MoserProbe {
        #[command(flatten)]
        range: RangeArg,
        #[command(flatten)]
        omega: OmegaArgs,
    },
    /// Write a zero table (plus metadata sidecar) to --out.
    Export(RangeArg),
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the worker pool")?;
    }
    let cfg = EvalConfig {
        target_abs_error: cli.abs_err.unwrap_or(EvalConfig::default().target_abs_error),
        ..EvalConfig::default()
    };
    cfg.validate()?;
    let format: Format = cli.format.into();

    let report = match &cli.command {
        Command::Eval { t } => cmd_eval(*t, &cfg)?,
        Command::Zeros(range) => {
            let (lo, hi) = range.bounds()?;
            let table = acquire(&cli, hi, &cfg)?;
            cmd_zeros(lo, hi, &table)?
        }
        Command::Stationary(range) => {
            let (lo, hi) = range.bounds()?;
            let table = acquire(&cli, hi, &cfg)?;
            cmd_stationary(lo, hi, &table, &cfg)?
        }
        Command::VerifySums { range, t } => {
            let (table, points) = match (range, t) {
                (_, Some(t)) => {
                    let table = acquire(&cli, 2.0 * t.abs(), &cfg)?;
                    (table, vec![*t])
                }
                (Some(range), None) => {
                    let (lo, hi) = parse_range(range)?;
                    let table = acquire(&cli, 2.0 * hi, &cfg)?;
                    let points = midpoints_in(&table, lo, hi);
                    (table, points)
                }
                (None, None) => bail!("verify-sums needs --range or --t"),
            };
            cmd_verify_sums(&points, &table, &cfg)?
        }
        Command::CosmoScan { range, constants } => {
            let (lo, hi) = range.bounds()?;
            let constants = constants.build()?;
            let table = acquire(&cli, 2.0 * hi, &cfg)?;
            cmd_cosmo_scan(lo, hi, &constants, &table, &cfg)?
        }
        Command::Intervals { range, constants } => {
            let (lo, hi) = range.bounds()?;
            let constants = constants.build()?;
            let table = acquire(&cli, hi + 10.0, &cfg)?;
            cmd_intervals(lo, hi, &constants, &table, &cfg)?
        }
        Command::Gaps(range) => {
            let (lo, hi) = range.bounds()?;
            let table = acquire(&cli, hi, &cfg)?;
            cmd_gaps(lo, hi, &table)?
        }
        Command::Omega { range, omega } => {
            let (lo, hi) = range.bounds()?;
            cmd_omega(lo, hi, omega, &cli, &cfg)?
        }
        Command::MoserProbe { range, omega } => {
            let (lo, hi) = range.bounds()?;
            let table = acquire(&cli, hi, &cfg)?;
            cmd_moser(lo, hi, omega, &table, &cfg)?
        }
        Command::Export(range) => {
            let (_, hi) = range.bounds()?;
            let table = acquire(&cli, hi, &cfg)?;
            let out = cli.out.as_deref().context("export needs --out PATH")?;
            write_table(&table, out, cfg.config_hash())?;
            eprintln!("# exported {} ordinates to {}", table.len(), out.display());
            return Ok(());
        }
    };

    if format == Format::Csv && !report.summary().is_null() {
        eprintln!("# summary: {}", report.summary());
    }
    report.emit(format, cli.out.as_deref())
}

fn acquire(cli: &Cli, needed: f64, cfg: &EvalConfig) -> Result<ZeroTable> {
    acquire_table(cli.zeros.as_deref(), cli.cache.as_deref(), needed, cfg)
}

fn midpoints_in(table: &ZeroTable, lo: f64, hi: f64) -> Vec<f64> {
    table
        .gaps()
        .map(|(a, b)| 0.5 * (a + b))
        .filter(|&m| m >= lo && m <= hi)
        .collect()
}

fn cmd_eval(t: f64, cfg: &EvalConfig) -> Result<Report> {
    let p = z_eval(t, cfg).with_context(|| format!("evaluating Z at t = {t}"))?;
    let mut report = Report::new("eval", &["t", "z", "dz", "d2z", "theta", "dtheta"]);
    report.push(vec![
        Cell::Real(p.t),
        Cell::Real(p.z),
        Cell::Real(p.dz),
        Cell::Real(p.d2z),
        Cell::Real(p.theta),
        Cell::Real(p.dtheta),
    ]);
    Ok(report)
}

fn cmd_zeros(lo: f64, hi: f64, table: &ZeroTable) -> Result<Report> {
    let mut report = Report::new("zeros", &["gamma"]);
    let mut count = 0usize;
    for &g in table.ordinates() {
        if g > lo && g <= hi {
            report.push(vec![Cell::Real(g)]);
            count += 1;
        }
    }
    report.set_summary(json!({
        "count": count,
        "range": [lo, hi],
        "source": table.source().to_string(),
        "abs_error": table.abs_error(),
    }));
    Ok(report)
}

fn cmd_stationary(lo: f64, hi: f64, table: &ZeroTable, cfg: &EvalConfig) -> Result<Report> {
    let points = find_stationary_points(table, cfg).context("locating stationary points")?;
    let mut report =
        Report::new("stationary", &["t0", "kind", "gap_lo", "gap_hi", "z_at"]);
    let mut count = 0usize;
    for p in &points {
        if p.t0 < lo || p.t0 > hi {
            continue;
        }
        report.push(vec![
            Cell::Real(p.t0),
            Cell::Text(kind_name(p.kind).to_string()),
            Cell::Real(p.gap.0),
            Cell::Real(p.gap.1),
            Cell::Real(p.z_at),
        ]);
        count += 1;
    }
    report.set_summary(json!({ "count": count, "range": [lo, hi] }));
    Ok(report)
}

fn kind_name(kind: PointKind) -> &'static str {
    match kind {
        PointKind::Stationary => "stationary",
        PointKind::GapMidpoint => "midpoint",
    }
}

fn cmd_verify_sums(points: &[f64], table: &ZeroTable, cfg: &EvalConfig) -> Result<Report> {
    let mut report = Report::new(
        "verify-sums",
        &[
            "t",
            "sum_total",
            "first_lhs",
            "first_rhs",
            "first_residual",
            "second_residual_plus",
            "second_residual_minus",
            "winner",
            "tolerance",
        ],
    );
    let mut skipped = 0usize;
    let mut winners: Vec<SignConvention> = Vec::new();
    let mut rows: Vec<(f64, Vec<Cell>)> = Vec::new();
    for &t in points {
        let l22 = match first_identity_residual(t, table, cfg) {
            Ok(r) => r,
            Err(CoreError::TooCloseToZero { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e).with_context(|| format!("first identity at t = {t}")),
        };
        let l21 = second_identity_residual(t, table, cfg)
            .with_context(|| format!("second identity at t = {t}"))?;
        let tol = (10.0 / l21.t).max(0.05);
        winners.push(l21.winner());
        rows.push((
            l21.t,
            vec![
                Cell::Real(l21.t),
                Cell::Real(l21.sum_total),
                Cell::Real(l22.lhs),
                Cell::Real(l22.rhs),
                Cell::Real(l22.residual),
                Cell::Real(l21.residual_plus),
                Cell::Real(l21.residual_minus),
                Cell::Text(l21.winner().to_string()),
                Cell::Real(tol),
            ],
        ));
    }
    rows.sort_by(|a, b| a.0.total_cmp(&b.0));
    let n = rows.len();
    for (_, row) in rows {
        report.push(row);
    }
    let consistent = winners.windows(2).all(|w| w[0] == w[1]);
    report.set_summary(json!({
        "points": n,
        "skipped_near_zeros": skipped,
        "winner_consistent": consistent,
        "winner": winners.first().map(|w| w.to_string()),
    }));
    Ok(report)
}

fn cmd_cosmo_scan(
    lo: f64,
    hi: f64,
    constants: &PhysicalConstants,
    table: &ZeroTable,
    cfg: &EvalConfig,
) -> Result<Report> {
    let (states, a1) = positivity_scan(lo, hi, constants, table, cfg)
        .with_context(|| format!("scanning [{lo}, {hi}]"))?;
    let mut report = Report::new(
        "cosmo-scan",
        &["t", "r", "rho", "p", "p_plus_c2rho", "p_plus_c2rho_sum_form", "threshold"],
    );
    for s in &states {
        report.push(vec![
            Cell::Real(s.t),
            Cell::Real(s.r),
            Cell::Real(s.rho),
            Cell::Real(s.p),
            Cell::Real(s.p_plus_c2rho),
            Cell::Real(s.p_plus_c2rho_sum_form),
            Cell::OptReal(s.threshold),
        ]);
    }
    report.set_summary(json!({
        "midpoints": states.len(),
        "a1": {
            "name": a1.name.to_string(),
            "value": a1.value,
            "range_measured": [a1.range_measured.0, a1.range_measured.1],
            "direction": a1.direction.to_string(),
        },
    }));
    Ok(report)
}

fn cmd_intervals(
    lo: f64,
    hi: f64,
    constants: &PhysicalConstants,
    table: &ZeroTable,
    cfg: &EvalConfig,
) -> Result<Report> {
    let centers = midpoints_in(table, lo, hi);
    let mut report =
        Report::new("intervals", &["t0", "delta", "p_min_on_interval", "bound_value"]);
    let mut found = 0usize;
    for &t0 in &centers {
        match positive_pressure_interval(t0, constants, table, cfg) {
            Ok(r) => {
                report.push(vec![
                    Cell::Real(r.t0),
                    Cell::Real(r.delta),
                    Cell::Real(r.p_min_on_interval),
                    Cell::Real(r.bound_value),
                ]);
                found += 1;
            }
            Err(CoreError::NotPositiveAtCenter { .. }) => {}
            Err(e) => return Err(e).with_context(|| format!("interval search at t0 = {t0}")),
        }
    }
    report.set_summary(json!({
        "centers": centers.len(),
        "intervals": found,
        "range": [lo, hi],
    }));
    Ok(report)
}

fn cmd_gaps(lo: f64, hi: f64, table: &ZeroTable) -> Result<Report> {
    let (stats, _) = littlewood_gap_stat(table).context("computing gap statistics")?;
    let mut report = Report::new("gaps", &["gamma_lo", "gamma_hi", "gap", "normalized"]);
    let mut sup = f64::NEG_INFINITY;
    let mut arg = None;
    let mut count = 0usize;
    for s in &stats {
        if s.gamma_lo < lo || s.gamma_lo > hi {
            continue;
        }
        if let Some(n) = s.normalized {
            if n > sup {
                sup = n;
                arg = Some(s.gamma_lo);
            }
        }
        report.push(vec![
            Cell::Real(s.gamma_lo),
            Cell::Real(s.gamma_hi),
            Cell::Real(s.gap),
            Cell::OptReal(s.normalized),
        ]);
        count += 1;
    }
    report.set_summary(json!({
        "gaps": count,
        "sup_normalized": if sup.is_finite() { Some(sup) } else { None },
        "arg_sup_gamma_lo": arg,
    }));
    Ok(report)
}

fn cmd_omega(lo: f64, hi: f64, omega: &OmegaArgs, cli: &Cli, cfg: &EvalConfig) -> Result<Report> {
    // records are O(1)-sized values; the default grid precision favors
    // throughput unless --abs-err tightens it
    let grid_cfg = EvalConfig {
        target_abs_error: cli.abs_err.unwrap_or(1e-6),
        rs_correction_order: 2,
        ..*cfg
    };
    let records = omega_probe(lo, hi, omega.beta, omega.a2, &grid_cfg)
        .with_context(|| format!("scanning [{lo}, {hi}]"))?;
    let mut report = Report::new(
        "omega",
        &["t", "abs_z", "kind", "implied_beta", "exceeds_omega_bound", "exceeds_alpha_form"],
    );
    for r in &records {
        report.push(record_row(r));
    }
    report.set_summary(json!({
        "records": records.len(),
        "beta": omega.beta,
        "a2": omega.a2,
        "max_abs_z": records.last().map(|r| r.abs_z),
    }));
    Ok(report)
}

fn record_row(r: &zcosmo_core::OmegaRecord) -> Vec<Cell> {
    vec![
        Cell::Real(r.t),
        Cell::Real(r.abs_z),
        Cell::Text(r.kind.to_string()),
        Cell::OptReal(r.implied_beta),
        Cell::Flag(r.exceeds_omega_bound),
        Cell::Flag(r.exceeds_alpha_form),
    ]
}

fn cmd_moser(
    lo: f64,
    hi: f64,
    omega: &OmegaArgs,
    table: &ZeroTable,
    cfg: &EvalConfig,
) -> Result<Report> {
    let all = find_stationary_points(table, cfg).context("locating stationary points")?;
    let in_range: Vec<_> = all.into_iter().filter(|p| p.t0 >= lo && p.t0 <= hi).collect();
    let probe = moser_assumption_probe(&in_range, omega.beta, omega.a2)?;
    let mut report = Report::new(
        "moser-probe",
        &["t", "abs_z", "kind", "implied_beta", "exceeds_omega_bound", "exceeds_alpha_form"],
    );
    for r in &probe.exceeding {
        report.push(record_row(r));
    }
    report.set_summary(json!({
        "stationary_points": probe.total,
        "count_exceeding": probe.count_exceeding,
        "fraction": probe.fraction,
        "largest_abs_z": probe.largest.map(|r| r.abs_z),
        "largest_t": probe.largest.map(|r| r.t),
        "beta": omega.beta,
        "a2": omega.a2,
    }));
    Ok(report)
}
