//! Seeded random graph generation for property tests and check suites.
//!
//! Everything here is deterministic given the seed: the same seed always
//! yields the same sequence of graphs, independent of platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError};

/// Creates the deterministic RNG used throughout the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws a connected Erdos-Renyi graph on `n` vertices with edge
/// probability `p`, retrying until the sample is connected.
///
/// To keep the retry loop finite even for hopeless parameters, the edge
/// probability is nudged upward every 50 failed attempts. With `n <= 1`
/// the empty or one-vertex graph is returned directly.
///
/// # Panics
///
/// Panics if `p` is not a finite value in `[0, 1]`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    assert!(p.is_finite() && (0.0..=1.0).contains(&p), "edge probability must be in [0, 1]");
    let mut p = p;
    let mut failures = 0u32;
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        match Graph::from_edges(n, &edges) {
            Ok(g) => return g,
            Err(GraphError::Disconnected) => {
                failures += 1;
                if failures % 50 == 0 {
                    p = (p + 0.1).min(1.0);
                }
            }
            Err(e) => unreachable!("generator produced an invalid edge list: {e}"),
        }
    }
}

/// Draws a uniformly random labelled tree on `n >= 1` vertices via a
/// random Prufer sequence.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n == 1 {
        return Graph::from_edges(1, &[]).expect("single vertex");
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]).expect("single edge");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prufer decoding yields a tree")
}
