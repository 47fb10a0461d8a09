//! Criterion benchmarks for gridpart live under `benches/`.

/// Shapes exercised by the benchmarks, `(rows, cols)`.
pub const SHAPES: &[(usize, usize)] = &[(2, 3), (3, 3), (2, 5), (3, 4)];
