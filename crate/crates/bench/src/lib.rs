//! Criterion benchmarks for `eulerpaths`; see `benches/`.
