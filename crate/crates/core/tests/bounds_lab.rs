//! Probe behavior over the reference table and live stationary points.

use zcosmo_core::{
    find_stationary_points, littlewood_gap_stat, moser_assumption_probe, omega_probe, EvalConfig,
    PointKind, ZeroTable,
};

fn fixture_table() -> ZeroTable {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/zeros_first_100.txt");
    zcosmo_core::ingest_zero_table(std::path::Path::new(path), 240.0, 1e-9).unwrap()
}

#[test]
fn gap_supremum_over_the_reference_table() {
    let table = fixture_table();
    let (stats, a) = littlewood_gap_stat(&table).unwrap();
    assert_eq!(stats.len(), 99);
    assert!(a.value.is_finite() && a.value > 0.0);
    // the arg-max is recoverable from the list
    let argmax = stats
        .iter()
        .filter(|s| s.normalized.is_some())
        .max_by(|x, y| x.normalized.unwrap().total_cmp(&y.normalized.unwrap()))
        .unwrap();
    assert_eq!(argmax.normalized.unwrap(), a.value);
    // repeated evaluation is bit-identical
    let (_, again) = littlewood_gap_stat(&table).unwrap();
    assert_eq!(a.value.to_bits(), again.value.to_bits());
}

#[test]
fn stationary_maxima_never_beat_the_refined_grid_scan() {
    let table = fixture_table();
    let cfg = EvalConfig::default();
    let stationary = find_stationary_points(&table, &cfg).unwrap();
    let in_range: Vec<_> = stationary
        .iter()
        .filter(|p| matches!(p.kind, PointKind::Stationary) && p.t0 >= 20.0 && p.t0 <= 100.0)
        .collect();
    assert!(!in_range.is_empty());
    let stat_max = in_range.iter().map(|p| p.z_at.abs()).fold(0.0f64, f64::max);
    let records = omega_probe(20.0, 100.0, 0.25, 1.0, &cfg).unwrap();
    let grid_max = records.last().unwrap().abs_z;
    assert!(
        stat_max <= grid_max * (1.0 + 1e-6) + 1e-9,
        "stationary max {stat_max} vs refined grid max {grid_max}"
    );
}

#[test]
fn higher_beta_means_fewer_exceeders() {
    let table = fixture_table();
    let cfg = EvalConfig::default();
    let stationary = find_stationary_points(&table, &cfg).unwrap();
    let betas = [0.1, 0.25, 0.4, 0.49];
    let mut counts = Vec::new();
    for &b in &betas {
        let r = moser_assumption_probe(&stationary, b, 1.0).unwrap();
        assert!(r.total > 0);
        assert!((0.0..=1.0).contains(&r.fraction));
        for e in &r.exceeding {
            assert!(e.abs_z > 1.0 * e.t.ln().powf(b).exp());
        }
        counts.push(r.count_exceeding);
    }
    for w in counts.windows(2) {
        assert!(w[1] <= w[0], "the bound grows with beta, so exceeders cannot increase");
    }
}
