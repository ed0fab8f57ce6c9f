//! Wall-clock timing of the planar MaxLA solver on random trees.

use std::time::Instant;

use serde::Serialize;

use crate::generators::random_tree;
use crate::planar::max_planar;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchRow {
    pub size: usize,
    pub mean_ns: f64,
    pub std_ns: f64,
}

/// Times `max_planar` on `trials` random trees per size; trial `t` of every
/// size uses seed `seed + t`. Tree generation is not timed.
pub fn bench_max_planar(sizes: &[usize], trials: usize, seed: u64) -> Vec<BenchRow> {
    let trials = trials.max(1);
    sizes
        .iter()
        .map(|&size| {
            let samples: Vec<f64> = (0..trials)
                .map(|t| {
                    let tree = random_tree(size.max(1), seed.wrapping_add(t as u64));
                    let start = Instant::now();
                    let (arr, d) = max_planar(&tree);
                    let elapsed = start.elapsed().as_nanos() as f64;
                    std::hint::black_box((arr, d));
                    elapsed
                })
                .collect();
            let mean = samples.iter().sum::<f64>() / trials as f64;
            let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / trials as f64;
            BenchRow {
                size,
                mean_ns: mean,
                std_ns: var.sqrt(),
            }
        })
        .collect()
}
