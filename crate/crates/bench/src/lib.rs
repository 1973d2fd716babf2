//! Criterion benchmarks for the `romik` crate; see `benches/core.rs`.
