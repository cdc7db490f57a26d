//! Seeded random graphs for property checks.

use rand::Rng;

use crate::graph::Graph;

/// G(n, p): each of the `n(n-1)/2` pairs is an edge independently with
/// probability `p`.
pub fn erdos_renyi<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are valid")
}

/// G(n, p) conditioned on being connected, by rejection.
pub fn connected_erdos_renyi<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(n <= 1 || p > 0.0, "p = 0 never yields a connected graph");
    loop {
        let g = erdos_renyi(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}
