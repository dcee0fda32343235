//! Release-contract checks, one per shipped guarantee.
//!
//! Runs without the test harness: each check prints exactly one line,
//! `criterion NN: PASS - ...` or `criterion NN: FAIL - ...`, and the
//! process exits nonzero if any check failed. The expensive shared
//! prerequisite (a zero table covering heights up to 10^4) is built once
//! up front; progress notes go to standard error.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zcosmo_core::{
    chi, find_zeros, first_identity_residual, friedmann_residuals, ingest_zero_table,
    littlewood_gap_stat, positive_pressure_interval, positivity_scan, pressure,
    second_identity_residual, verify_against, z_eval, zeta_on_line, Error, EvalConfig, EvalPath,
    PhysicalConstants, ZeroTable,
};

const FIXTURE: &str =
    concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/data/zeros_first_100.txt");
const BIN: &str = env!("CARGO_BIN_EXE_zcosmo");

/// Height covered by the shared table: enough for zero sums with cutoff
/// 2t at t up to 5000 and for the first 10^4 gaps.
const TABLE_HI: f64 = 10_000.0;

/// Independently derived value of zeta(1/2).
const ZETA_HALF: f64 = -1.4603545088095868;

struct Ctx {
    cfg: EvalConfig,
    consts: PhysicalConstants,
    table: ZeroTable,
}

type Check = fn(&Ctx) -> Result<String, String>;

fn main() {
    let build = Instant::now();
    let cfg = EvalConfig::default();
    eprintln!("# acceptance: computing the shared zero table up to {TABLE_HI} ...");
    let table = match find_zeros(0.05, TABLE_HI, &cfg) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("# acceptance: shared table build failed: {e}");
            std::process::exit(1);
        }
    };
    eprintln!(
        "# acceptance: {} ordinates in {:.1} s",
        table.len(),
        build.elapsed().as_secs_f64()
    );
    let ctx = Ctx { cfg, consts: PhysicalConstants::default(), table };

    let checks: [(&str, Check); 11] = [
        ("zero correctness", c01_zero_correctness),
        ("evaluation accuracy", c02_evaluation_accuracy),
        ("derivative integrity", c03_derivative_integrity),
        ("zero-sum identity", c04_zero_sum_identity),
        ("sign-convention selection", c05_sign_convention),
        ("Friedmann self-consistency", c06_friedmann_consistency),
        ("positivity of p + c^2 rho", c07_positivity_scan),
        ("positive-pressure intervals", c08_pressure_intervals),
        ("gap-statistic reproducibility", c09_gap_statistic),
        ("chi modulus", c10_chi_modulus),
        ("report determinism", c11_report_determinism),
    ];

    let mut failures = 0usize;
    for (i, (name, run)) in checks.iter().enumerate() {
        let started = Instant::now();
        let outcome = run(&ctx);
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => {
                println!("criterion {:2}: PASS - {name}: {detail} [{secs:.1} s]", i + 1);
            }
            Err(detail) => {
                failures += 1;
                println!("criterion {:2}: FAIL - {name}: {detail} [{secs:.1} s]", i + 1);
            }
        }
    }
    if failures > 0 {
        eprintln!("# acceptance: {failures} of {} criteria failed", checks.len());
        std::process::exit(1);
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn check(cond: bool, msg: String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg)
    }
}

/// Tolerance for the zero-sum identities at height t.
fn identity_tolerance(t: f64) -> f64 {
    (10.0 / t).max(0.05)
}

/// The computed zeros on (0, 100] number exactly 29 and match the
/// published table to 1e-6 per ordinate, within 10 seconds.
fn c01_zero_correctness(ctx: &Ctx) -> Result<String, String> {
    let started = Instant::now();
    let computed = find_zeros(0.05, 100.0, &ctx.cfg).map_err(err)?;
    let elapsed = started.elapsed();
    let published = ingest_zero_table(Path::new(FIXTURE), 0.0, 1e-6).map_err(err)?;
    let report = verify_against(&computed, &published, 1e-6).map_err(err)?;
    check(computed.len() == 29, format!("expected 29 zeros on (0, 100], found {}", computed.len()))?;
    check(
        report.counts_match() && report.compared == 29,
        format!("count mismatch against the published table: {report}"),
    )?;
    check(
        report.exceed_count == 0,
        format!("{} ordinates deviate beyond 1e-6 (max {:.2e})", report.exceed_count, report.max_abs_delta),
    )?;
    check(
        elapsed <= Duration::from_secs(10),
        format!("took {:.2} s, cap 10 s", elapsed.as_secs_f64()),
    )?;
    Ok(format!(
        "29 zeros on (0, 100], max deviation {:.1e} from the published table, {:.2} s",
        report.max_abs_delta,
        elapsed.as_secs_f64()
    ))
}

/// The production evaluator agrees with the Euler-Maclaurin oracle to
/// 2e-10 at 500 random heights in [60, 10^4]; the pure asymptotic path
/// stays inside its own error envelope; Z(0) recovers zeta(1/2) to 1e-8.
fn c02_evaluation_accuracy(ctx: &Ctx) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let oracle = EvalConfig { path: EvalPath::EulerMaclaurin, ..ctx.cfg };
    // Relaxed target so the asymptotic formula answers on its own at
    // every sampled height; judged against its order-2 envelope below.
    let asymptotic =
        EvalConfig { path: EvalPath::RiemannSiegel, rs_correction_order: 2, target_abs_error: 1.0, ..ctx.cfg };
    let mut max_production = 0.0f64;
    let mut worst_envelope_ratio = 0.0f64;
    for _ in 0..500 {
        let t: f64 = rng.gen_range(60.0..10_000.0);
        let auto = z_eval(t, &ctx.cfg).map_err(err)?;
        let em = z_eval(t, &oracle).map_err(err)?;
        let d = (auto.z - em.z).abs();
        max_production = max_production.max(d);
        check(d <= 2e-10, format!("production Z deviates {d:.2e} from the oracle at t={t:.3}"))?;

        let rs = z_eval(t, &asymptotic).map_err(err)?;
        // empirical order-2 remainder envelope of the asymptotic formula
        let envelope = 0.011 * (t / std::f64::consts::TAU).powf(-1.75);
        let ratio = (rs.z - em.z).abs() / envelope;
        worst_envelope_ratio = worst_envelope_ratio.max(ratio);
        check(
            ratio <= 1.0,
            format!("asymptotic Z misses its envelope at t={t:.3}: |delta| = {ratio:.2} envelopes"),
        )?;
    }
    let z0 = z_eval(0.0, &ctx.cfg).map_err(err)?;
    let d0 = (z0.z - ZETA_HALF).abs();
    check(d0 <= 1e-8, format!("Z(0) = {:.12} vs zeta(1/2) = {ZETA_HALF:.12}", z0.z))?;
    Ok(format!(
        "500 points in [60, 1e4]: max |Z - oracle| {max_production:.1e}; asymptotic path at worst {:.0}% of its envelope; |Z(0) - zeta(1/2)| {d0:.1e}",
        100.0 * worst_envelope_ratio
    ))
}

/// Analytic Z' matches a five-point finite-difference stencil to relative
/// error 1e-6 at 200 points where Z' is bounded away from zero.
fn c03_derivative_integrity(ctx: &Ctx) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let h = 2e-3;
    let mut accepted = 0usize;
    let mut max_rel = 0.0f64;
    while accepted < 200 {
        let t: f64 = rng.gen_range(20.0..2000.0);
        let p = z_eval(t, &ctx.cfg).map_err(err)?;
        if p.dz.abs() < 0.1 {
            // relative error needs a denominator bounded away from zero
            continue;
        }
        let z = |x: f64| -> Result<f64, String> { Ok(z_eval(x, &ctx.cfg).map_err(err)?.z) };
        let fd = (-z(t + 2.0 * h)? + 8.0 * z(t + h)? - 8.0 * z(t - h)? + z(t - 2.0 * h)?) / (12.0 * h);
        let rel = ((fd - p.dz) / p.dz).abs();
        max_rel = max_rel.max(rel);
        check(
            rel <= 1e-6,
            format!("Z' deviates from the stencil by {rel:.2e} relative at t={t:.4}"),
        )?;
        accepted += 1;
    }
    Ok(format!("200 points in [20, 2000]: max relative deviation {max_rel:.1e}"))
}

/// At 50 admissible heights the zero sum with cutoff 2t plus tail matches
/// -d/dt(Z'/Z) within max(0.05, 10/t), and band medians decay with t.
/// Runs within 60 seconds.
fn c04_zero_sum_identity(ctx: &Ctx) -> Result<String, String> {
    let started = Instant::now();
    let bands: [(f64, f64, usize); 3] = [(50.0, 100.0, 17), (200.0, 400.0, 17), (800.0, 1000.0, 16)];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut medians = Vec::with_capacity(bands.len());
    for (lo, hi, want) in bands {
        let mut residuals = Vec::with_capacity(want);
        while residuals.len() < want {
            let t: f64 = rng.gen_range(lo..hi);
            if ctx.table.nearest_distance(t) <= 0.05 {
                continue;
            }
            let r = first_identity_residual(t, &ctx.table, &ctx.cfg).map_err(err)?;
            let tol = identity_tolerance(t);
            check(
                r.residual.abs() <= tol,
                format!("residual {:.3e} exceeds tolerance {tol:.3e} at t={t:.4}", r.residual),
            )?;
            residuals.push(r.residual.abs());
        }
        residuals.sort_by(f64::total_cmp);
        medians.push(residuals[residuals.len() / 2]);
    }
    let elapsed = started.elapsed();
    check(
        medians[0] > medians[1] && medians[1] > medians[2],
        format!(
            "band medians do not decay with height: {:.2e} vs {:.2e} vs {:.2e}",
            medians[0], medians[1], medians[2]
        ),
    )?;
    check(
        elapsed <= Duration::from_secs(60),
        format!("took {:.1} s, cap 60 s", elapsed.as_secs_f64()),
    )?;
    Ok(format!(
        "50 points within max(0.05, 10/t); band medians {:.1e} > {:.1e} > {:.1e}",
        medians[0], medians[1], medians[2]
    ))
}

/// Exactly one sign convention of the second zero-sum identity passes at
/// each of 20 heights, and it is the same convention everywhere.
fn c05_sign_convention(ctx: &Ctx) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut accepted = 0usize;
    let mut worst_plus = 0.0f64;
    let mut best_minus = f64::INFINITY;
    while accepted < 20 {
        let t: f64 = rng.gen_range(50.0..1000.0);
        if ctx.table.nearest_distance(t) <= 0.05 {
            continue;
        }
        let r = second_identity_residual(t, &ctx.table, &ctx.cfg).map_err(err)?;
        let tol = identity_tolerance(t);
        let plus_ok = r.residual_plus <= tol;
        let minus_ok = r.residual_minus <= tol;
        check(
            plus_ok != minus_ok,
            format!(
                "conventions not separated at t={t:.4}: plus {:.2e}, minus {:.2e}, tolerance {tol:.2e}",
                r.residual_plus, r.residual_minus
            ),
        )?;
        check(plus_ok, format!("the minus convention passed instead of plus at t={t:.4}"))?;
        worst_plus = worst_plus.max(r.residual_plus);
        best_minus = best_minus.min(r.residual_minus);
        accepted += 1;
    }
    Ok(format!(
        "20 points: plus passes everywhere (worst residual {worst_plus:.1e}); minus fails everywhere (best residual {best_minus:.1e})"
    ))
}

/// Both Friedmann constraint residuals vanish to 1e-9 at 500 admissible
/// heights, and the two algebraic routes to the pressure agree to 1e-9.
fn c06_friedmann_consistency(ctx: &Ctx) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (c, g) = (ctx.consts.c, ctx.consts.g_coupling);
    let mut accepted = 0usize;
    let mut worst_residual = 0.0f64;
    let mut worst_forms = 0.0f64;
    while accepted < 500 {
        let t: f64 = rng.gen_range(20.0..3000.0);
        if ctx.table.nearest_distance(t) <= 0.05 {
            // keep |Z| bounded away from zero so the 1e-9 absolute
            // comparisons are meaningful
            continue;
        }
        let (r1, r2) = match friedmann_residuals(t, &ctx.consts, &ctx.cfg) {
            Ok(v) => v,
            Err(Error::AtZeroOfZ { .. }) => continue,
            Err(e) => return Err(e.to_string()),
        };
        worst_residual = worst_residual.max(r1.abs()).max(r2.abs());
        check(
            r1.abs() <= 1e-9 && r2.abs() <= 1e-9,
            format!("constraint residuals ({r1:.2e}, {r2:.2e}) at t={t:.4}"),
        )?;

        let p_model = pressure(t, &ctx.consts, &ctx.cfg).map_err(err)?;
        let e = z_eval(t, &ctx.cfg).map_err(err)?;
        // expanded form: p = -(2 Z''/Z + (Z'/Z)^2 + c^2/Z^2) / g
        let lr = e.dz / e.z;
        let expanded = -(2.0 * e.d2z / e.z + lr * lr + c * c / (e.z * e.z)) / g;
        let d = (p_model - expanded).abs();
        worst_forms = worst_forms.max(d);
        check(d <= 1e-9, format!("pressure forms disagree by {d:.2e} at t={t:.4}"))?;
        accepted += 1;
    }
    Ok(format!(
        "500 points in [20, 3000]: worst constraint residual {worst_residual:.1e}; pressure forms within {worst_forms:.1e}"
    ))
}

/// p + c^2 rho is positive at every gap midpoint with t0 in [20, 5000],
/// and the inferred constant A1 = inf (p + c^2 rho) / (logloglog t0)^2 is
/// positive. Runs within 5 minutes.
fn c07_positivity_scan(ctx: &Ctx) -> Result<String, String> {
    let started = Instant::now();
    let (states, a1) =
        positivity_scan(20.0, 5000.0, &ctx.consts, &ctx.table, &ctx.cfg).map_err(err)?;
    let elapsed = started.elapsed();
    let min_direct = states.iter().map(|s| s.p_plus_c2rho).fold(f64::INFINITY, f64::min);
    check(!states.is_empty(), "the scan produced no midpoints".into())?;
    check(min_direct > 0.0, format!("min p + c^2 rho = {min_direct:.3e}"))?;
    check(
        a1.value.is_finite() && a1.value > 0.0,
        format!("A1 = {} is not a positive finite number", a1.value),
    )?;
    check(
        elapsed <= Duration::from_secs(300),
        format!("took {:.0} s, cap 300 s", elapsed.as_secs_f64()),
    )?;
    Ok(format!(
        "{} midpoints in [20, 5000]: min p + c^2 rho = {:.3e} > 0; A1 = {:.6} ({} over the range)",
        states.len(),
        min_direct,
        a1.value,
        a1.direction
    ))
}

/// At least 50 disjoint intervals [t0 - delta, t0 + delta] with p > 0
/// throughout, centered at gap midpoints in [20, 5000]; the count over
/// [20, 2500] is strictly smaller.
fn c08_pressure_intervals(ctx: &Ctx) -> Result<String, String> {
    // Every 8th midpoint keeps the search affordable; the criterion needs
    // existence, not exhaustiveness. Sampling runs at a relaxed accuracy;
    // the most marginal samples of each interval are still re-verified
    // with the oracle path inside the search.
    let sampling = EvalConfig { target_abs_error: 1e-6, rs_correction_order: 2, ..ctx.cfg };
    let midpoints: Vec<f64> = ctx
        .table
        .gaps()
        .map(|(a, b)| 0.5 * (a + b))
        .filter(|m| (20.0..=5000.0).contains(m))
        .step_by(8)
        .collect();
    let mut intervals = Vec::new();
    for &m in &midpoints {
        match positive_pressure_interval(m, &ctx.consts, &ctx.table, &sampling) {
            Ok(iv) => intervals.push(iv),
            Err(Error::NotPositiveAtCenter { .. }) => {}
            Err(e) => return Err(e.to_string()),
        }
    }
    check(
        intervals.iter().all(|iv| iv.delta > 0.0),
        "an interval with zero half-width was reported".into(),
    )?;
    for w in intervals.windows(2) {
        check(
            w[0].t0 + w[0].delta < w[1].t0 - w[1].delta,
            format!("intervals at t0 = {:.4} and {:.4} overlap", w[0].t0, w[1].t0),
        )?;
    }
    let total = intervals.len();
    let below = intervals.iter().filter(|iv| iv.t0 <= 2500.0).count();
    check(total >= 50, format!("only {total} disjoint positive-pressure intervals, need 50"))?;
    check(below < total, format!("no growth: {below} intervals on [20, 2500] vs {total} on [20, 5000]"))?;
    let (min_d, max_d) = intervals
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), iv| (lo.min(iv.delta), hi.max(iv.delta)));
    Ok(format!(
        "{total} disjoint intervals from {} sampled midpoints ({below} below 2500); half-widths in [{min_d:.1e}, {max_d:.1e}]",
        midpoints.len()
    ))
}

/// The sup of (gap) * logloglog(gamma) over the first 10^4 gaps is finite
/// and bit-identical when the whole pipeline is run a second time.
fn c09_gap_statistic(ctx: &Ctx) -> Result<String, String> {
    fn sup_of_first_gaps(table: &ZeroTable) -> Result<(f64, f64), String> {
        let (stats, _) = littlewood_gap_stat(table).map_err(err)?;
        check(stats.len() >= 10_000, format!("only {} gaps available, need 10^4", stats.len()))?;
        let mut sup = f64::NEG_INFINITY;
        let mut at = f64::NAN;
        for s in stats.iter().take(10_000) {
            if let Some(v) = s.normalized {
                if v > sup {
                    sup = v;
                    at = s.gamma_lo;
                }
            }
        }
        Ok((sup, at))
    }
    let (sup1, at1) = sup_of_first_gaps(&ctx.table)?;
    check(sup1.is_finite(), format!("sup = {sup1}"))?;
    // second run of the full pipeline: a fresh scan, not a cached table
    let rebuilt = find_zeros(0.05, TABLE_HI, &ctx.cfg).map_err(err)?;
    let (sup2, at2) = sup_of_first_gaps(&rebuilt)?;
    check(
        sup1.to_bits() == sup2.to_bits() && at1.to_bits() == at2.to_bits(),
        format!("not reproducible: {sup1:.17e} at {at1:.17e} vs {sup2:.17e} at {at2:.17e}"),
    )?;
    Ok(format!("sup = {sup1:.6} attained above gamma = {at1:.3}, bit-identical across two full scans"))
}

/// |chi(1/2 + it)| = 1 within 1e-10 at 1000 random heights, with the
/// phase cross-checked against the oracle zeta values.
fn c10_chi_modulus(ctx: &Ctx) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst_mod = 0.0f64;
    let mut worst_phase = 0.0f64;
    for i in 0..1000 {
        let t: f64 = rng.gen_range(0.1..10_000.0);
        let c = chi(t);
        let dev = (c.norm() - 1.0).abs();
        worst_mod = worst_mod.max(dev);
        check(dev <= 1e-10, format!("|chi| deviates by {dev:.2e} at t={t:.4}"))?;
        if i % 10 == 0 && t <= 1000.0 {
            // e^{i theta} zeta(1/2 + it) is real, so chi = e^{-2 i theta}
            // is phase-locked to the oracle: zeta / conj(zeta) must equal
            // chi wherever zeta is bounded away from zero.
            let z = zeta_on_line(t, &ctx.cfg);
            if z.norm() > 1e-3 {
                let independent = z / z.conj();
                let d = (independent - c).norm();
                worst_phase = worst_phase.max(d);
                check(d <= 1e-8, format!("chi phase deviates by {d:.2e} from the oracle at t={t:.4}"))?;
            }
        }
    }
    let c25 = chi(25.0);
    let d25 = (c25.re - (-0.7753417090116219611022322f64))
        .hypot(c25.im - (-0.631541949728549177580608f64));
    check(d25 <= 1e-13, format!("chi(25) deviates {d25:.2e} from the reference value"))?;
    Ok(format!(
        "1000 points: max ||chi| - 1| = {worst_mod:.1e}; phase matches the oracle within {worst_phase:.1e}"
    ))
}

/// Repeated runs of CLI commands with fixed configuration produce
/// byte-identical reports.
fn c11_report_determinism(ctx: &Ctx) -> Result<String, String> {
    let _ = ctx;
    let dir = tempfile::tempdir().map_err(err)?;
    let commands: [&[&str]; 11] = [
        &["eval", "--t", "1000.2"],
        &["eval", "--t", "1000.2", "--format", "json"],
        &["zeros", "--range", "0", "100", "--zeros", FIXTURE],
        &["stationary", "--range", "20", "100", "--zeros", FIXTURE],
        &["verify-sums", "--range", "50", "100", "--zeros", FIXTURE],
        &["cosmo-scan", "--range", "20", "100", "--zeros", FIXTURE],
        &["cosmo-scan", "--range", "20", "100", "--zeros", FIXTURE, "--format", "json"],
        &["intervals", "--range", "20", "80", "--zeros", FIXTURE],
        &["gaps", "--range", "14", "236", "--zeros", FIXTURE],
        &["omega", "--range", "20", "40"],
        &["moser-probe", "--range", "20", "100", "--zeros", FIXTURE],
    ];
    for args in commands {
        let run = |n: usize| -> Result<Vec<u8>, String> {
            let out = Command::new(BIN).args(args).output().map_err(err)?;
            check(
                out.status.success(),
                format!("run {n} of {args:?} failed: {}", String::from_utf8_lossy(&out.stderr)),
            )?;
            Ok(out.stdout)
        };
        let first = run(1)?;
        let second = run(2)?;
        check(first == second, format!("stdout differs between reruns of {args:?}"))?;
    }
    // an exported table must also be byte-stable, sidecar included
    let (pa, pb) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    for p in [&pa, &pb] {
        let out = Command::new(BIN)
            .args(["export", "--range", "0", "100", "--zeros", FIXTURE, "--out"])
            .arg(p)
            .output()
            .map_err(err)?;
        check(out.status.success(), format!("export failed: {}", String::from_utf8_lossy(&out.stderr)))?;
    }
    let files_equal = std::fs::read(&pa).map_err(err)? == std::fs::read(&pb).map_err(err)?
        && std::fs::read(pa.with_extension("txt.meta")).map_err(err)?
            == std::fs::read(pb.with_extension("txt.meta")).map_err(err)?;
    check(files_equal, "exported tables differ between runs".into())?;
    Ok(format!("{} command pairs and one export pair byte-identical", commands.len()))
}
