//! Seeded workloads shared by the benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use unital_core::{random, Complex2, Complex3, CrossedModule, Matrix};

/// Dense `n × n` integer matrices with entries in `[-bound, bound]`.
pub fn square_matrices(n: usize, bound: i64, count: usize, seed: u64) -> Vec<Matrix> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
            Matrix::from_rows(n, n, &rows).expect("square rows")
        })
        .collect()
}

pub fn complexes2(max_order: i64, count: usize, seed: u64) -> Vec<Complex2> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random::complex2(&mut rng, max_order)).collect()
}

pub fn complexes3(max_order: i64, count: usize, seed: u64) -> Vec<Complex3> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random::complex3(&mut rng, max_order)).collect()
}

pub fn crossed_modules(max_order: usize, count: usize, seed: u64) -> Vec<CrossedModule> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random::crossed_module(&mut rng, max_order)).collect()
}
