//! Benchmark-only crate; see `benches/cores.rs`.
