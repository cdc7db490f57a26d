//! Shared fixtures for the criterion benchmarks.

use nilgraph_core::random::erdos_renyi;
use nilgraph_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The six-vertex, seven-edge example graph used throughout the tests.
pub fn example_graph() -> Graph {
    nilgraph_core::parse_edge_list("1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6").unwrap()
}

/// A reproducible G(n, p) sample.
pub fn seeded_graph(seed: u64, n: usize, p: f64) -> Graph {
    erdos_renyi(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
}
