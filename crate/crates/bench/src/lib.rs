//! Shared fixtures for the criterion benchmarks.

use hfx_core::{catalog_get, AuditOptions, SuiteReport, CATALOG_NAMES};

/// Builds and audits every catalog entry.
pub fn run_catalog() -> Vec<SuiteReport> {
    let opts = AuditOptions::default();
    CATALOG_NAMES
        .iter()
        .map(|name| catalog_get(name).and_then(|e| e.run(&opts)).expect("catalog entry"))
        .collect()
}
