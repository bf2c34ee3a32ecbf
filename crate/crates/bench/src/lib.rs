//! Benchmark-only crate; see `benches/qc.rs`.
