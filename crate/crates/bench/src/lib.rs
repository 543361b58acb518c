//! Criterion benchmarks for the word problem and the language kernel; see
//! `benches/`.
