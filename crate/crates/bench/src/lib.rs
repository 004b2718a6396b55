//! Benchmark-only crate; see `benches/core_ops.rs`.

/// Deterministic multivector inputs for the product benchmarks.
pub fn sample_multivectors(
    n: usize,
    count: usize,
) -> Vec<cliffordlab_core::Multivector> {
    let mut rng = cliffordlab_core::rng::SplitMix64::new(99);
    (0..count).map(|_| rng.multivector(n, 4, 9)).collect()
}
