//! Criterion benchmarks for `ncq-core`; see `benches/`.
