//! Criterion benchmarks for `rectcomp`; the benchmarks live in `benches/`.
