//! Property tests for the persistence layer and the zero-sum invariants
//! on randomly generated admissible tables.

use proptest::prelude::*;
use zcosmo_core::{read_cached_table, write_table, zero_sum, TableSource, ZeroTable};

/// Strictly increasing ordinates starting above the first true zero.
fn ordinates_strategy() -> impl Strategy<Value = Vec<f64>> {
    (proptest::collection::vec(0.01f64..30.0, 2..40), 14.2f64..80.0).prop_map(|(deltas, start)| {
        let mut out = Vec::with_capacity(deltas.len() + 1);
        let mut t = start;
        out.push(t);
        for d in deltas {
            t += d;
            out.push(t);
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_roundtrips_through_disk(ords in ordinates_strategy()) {
        let h_max = ords.last().unwrap() + 5.0;
        let table = ZeroTable::new(ords.clone(), h_max, TableSource::Computed, 1e-9).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("zeros.txt");
        write_table(&table, &path, 0xfeed).unwrap();
        let cached = read_cached_table(&path).unwrap();
        prop_assert_eq!(cached.config_hash, 0xfeed);
        prop_assert_eq!(cached.table.len(), table.len());
        prop_assert_eq!(cached.table.source(), TableSource::Computed);
        prop_assert_eq!(cached.table.h_max(), table.h_max());
        // ordinates persist at round-trip precision: the reread is exact
        prop_assert_eq!(cached.table.ordinates(), table.ordinates());
    }

    #[test]
    fn zero_sum_dominates_its_leading_term(
        ords in ordinates_strategy(),
        frac in 0.1f64..0.9,
    ) {
        let h_max = ords.last().unwrap() + 5.0;
        let table = ZeroTable::new(ords.clone(), h_max, TableSource::Computed, 1e-9).unwrap();
        // place t strictly inside the first gap, away from both edges
        let t = ords[0] + (ords[1] - ords[0]) * frac;
        let h_cut = 2.0 * t;
        prop_assume!(h_cut <= table.h_max());
        prop_assume!(table.nearest_distance(t) > 1e-4);
        let r = zero_sum(t, &table, h_cut).unwrap();
        prop_assert!(r.partial > 0.0);
        prop_assert!(r.tail > 0.0);
        prop_assert!(r.total >= r.partial);
        let d = table.nearest_distance(t);
        prop_assert!(r.total >= 1.0 / (d * d), "dominant term bound");
        prop_assert!((r.nearest_gap_distance - d).abs() == 0.0);
    }
}
