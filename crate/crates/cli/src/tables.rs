//! Zero-table acquisition: explicit ingestion, cache reuse with a
//! staleness rule, or a fresh computation.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use zcosmo_core::{
    find_zeros, ingest_zero_table, read_cached_table, write_table, EvalConfig, TableSource,
    ZeroTable,
};

/// Error budget attached to tables ingested from a user-supplied file.
const INGESTED_ABS_ERROR: f64 = 1e-6;

/// Scan start when computing a table from scratch: safely below the
/// first zero.
const SCAN_FLOOR: f64 = 0.05;

fn cache_file(dir: &Path) -> PathBuf {
    dir.join("zeros.txt")
}

/// Obtain a zero table whose ordinates cover heights up to `needed`.
///
/// Priority: an explicitly given file (used as-is; coverage problems
/// surface later as InsufficientTable), then a cache directory (reused
/// when it covers `needed`; a config-hash mismatch downgrades the cached
/// data to ingested provenance; refreshed otherwise), then a fresh
/// computation.
pub fn acquire_table(
    zeros: Option<&Path>,
    cache: Option<&Path>,
    needed: f64,
    cfg: &EvalConfig,
) -> Result<ZeroTable> {
    if let Some(path) = zeros {
        let table = ingest_zero_table(path, 0.0, INGESTED_ABS_ERROR)
            .with_context(|| format!("ingesting zero table {}", path.display()))?;
        eprintln!(
            "# zero table: ingested {} ({} ordinates, h_max {:.2})",
            path.display(),
            table.len(),
            table.h_max()
        );
        return Ok(table);
    }

    if let Some(dir) = cache {
        let file = cache_file(dir);
        if file.exists() {
            match read_cached_table(&file) {
                Ok(cached) => {
                    let fresh = cached.config_hash == cfg.config_hash();
                    if cached.table.h_max() >= needed {
                        let table = if fresh {
                            cached.table
                        } else {
                            // stale configuration: keep the data, drop the
                            // computed provenance
                            ZeroTable::new(
                                cached.table.ordinates().to_vec(),
                                cached.table.h_max(),
                                TableSource::Ingested,
                                cached.table.abs_error(),
                            )?
                        };
                        eprintln!(
                            "# zero table: cache {} ({} ordinates, h_max {:.2}{})",
                            file.display(),
                            table.len(),
                            table.h_max(),
                            if fresh { "" } else { ", stale config -> ingested" }
                        );
                        return Ok(table);
                    }
                    eprintln!(
                        "# zero table: cache covers {:.2} < {:.2}, recomputing",
                        cached.table.h_max(),
                        needed
                    );
                }
                Err(e) => {
                    eprintln!("# zero table: cache unreadable ({e}), recomputing");
                }
            }
        }
        let table = compute(needed, cfg)?;
        std::fs::create_dir_all(dir)
            .with_context(|| format!("creating cache directory {}", dir.display()))?;
        write_table(&table, &file, cfg.config_hash())
            .with_context(|| format!("writing cache {}", file.display()))?;
        eprintln!("# zero table: cached {} ordinates to {}", table.len(), file.display());
        return Ok(table);
    }

    compute(needed, cfg)
}

fn compute(needed: f64, cfg: &EvalConfig) -> Result<ZeroTable> {
    let hi = needed.max(30.0);
    let table = find_zeros(SCAN_FLOOR, hi, cfg)
        .with_context(|| format!("computing zeros up to {hi}"))?;
    eprintln!("# zero table: computed {} ordinates up to {:.2}", table.len(), hi);
    Ok(table)
}
