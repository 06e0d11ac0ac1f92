//! Shared fixtures for the benchmark targets.

use bgd_core::oracle::{gen_gnp, gen_planted, PlantedSpec};
use bgd_core::Graph;

pub fn planted(n: u32, k: u32, seed: u64) -> Graph {
    gen_planted(PlantedSpec { n, k, seed })
}

pub fn sparse_random(n: u32, seed: u64) -> Graph {
    gen_gnp(n, 2.0 / n as f64, seed)
}
