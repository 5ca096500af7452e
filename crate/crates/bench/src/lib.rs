//! Criterion benchmarks for the expensive paths of `fibward-core`; see `benches/`.
