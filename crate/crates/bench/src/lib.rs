//! Criterion benchmarks for `numsgp`; see `benches/`.
