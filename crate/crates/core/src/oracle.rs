//! Brute-force reference counts over every vertex subset.
//!
//! Nothing here shares code with the algebraic routes; each function tests
//! its defining property directly on a bit mask.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Poly;

/// Largest order the subset oracles accept.
pub const ORACLE_MAX_ORDER: usize = 24;

fn guard(g: &Graph, route: &'static str) -> Result<()> {
    if g.order() > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            route,
            n: g.order(),
            limit: ORACLE_MAX_ORDER,
        });
    }
    Ok(())
}

fn in_mask(mask: u32, v: usize) -> bool {
    mask >> (v - 1) & 1 == 1
}

fn tally_by_size(g: &Graph, pred: impl Fn(u32) -> bool) -> Poly {
    let mut counts = vec![0u64; g.order() + 1];
    for mask in 0u32..(1u32 << g.order()) {
        if pred(mask) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Poly::new(counts.into_iter().map(BigUint::from).collect())
}

/// Subsets with no edge inside them.
pub fn brute_independence(g: &Graph) -> Result<Poly> {
    guard(g, "independence oracle")?;
    Ok(tally_by_size(g, |mask| {
        g.edges()
            .iter()
            .all(|&(u, v)| !(in_mask(mask, u) && in_mask(mask, v)))
    }))
}

/// Subsets whose members are pairwise adjacent.
pub fn brute_clique(g: &Graph) -> Result<Poly> {
    guard(g, "clique oracle")?;
    let n = g.order();
    Ok(tally_by_size(g, |mask| {
        (1..=n).filter(|&u| in_mask(mask, u)).all(|u| {
            (u + 1..=n)
                .filter(|&v| in_mask(mask, v))
                .all(|v| g.is_adjacent(u, v))
        })
    }))
}

/// Subsets touching every edge.
pub fn brute_cover(g: &Graph) -> Result<Poly> {
    guard(g, "cover oracle")?;
    Ok(tally_by_size(g, |mask| {
        g.edges()
            .iter()
            .all(|&(u, v)| in_mask(mask, u) || in_mask(mask, v))
    }))
}

/// Cut sizes over all `2^n` side assignments, folded to unordered
/// bipartitions (each one is seen twice).
pub fn brute_cut(g: &Graph) -> Result<Poly> {
    guard(g, "cut oracle")?;
    if g.order() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let mut counts = vec![0u64; g.size() + 1];
    for mask in 0u32..(1u32 << g.order()) {
        let crossing = g
            .edges()
            .iter()
            .filter(|&&(u, v)| in_mask(mask, u) != in_mask(mask, v))
            .count();
        counts[crossing] += 1;
    }
    Ok(Poly::new(
        counts.into_iter().map(|c| BigUint::from(c / 2)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn fig1() -> Graph {
        parse_edge_list("1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6").unwrap()
    }

    #[test]
    fn independence() {
        assert_eq!(brute_independence(&fig1()).unwrap(), Poly::from_u64s(&[1, 6, 8, 2]));
        assert_eq!(brute_independence(&Graph::complete(3)).unwrap(), Poly::from_u64s(&[1, 3]));
        // Q3: 8 vertices, 16 non-adjacent pairs, 8 triples, the 2 colour classes
        assert_eq!(
            brute_independence(&Graph::hypercube(3)).unwrap(),
            Poly::from_u64s(&[1, 8, 16, 8, 2])
        );
        assert!(brute_independence(&Graph::empty(25)).is_err());
    }

    #[test]
    fn cliques() {
        assert_eq!(brute_clique(&Graph::complete(3)).unwrap(), Poly::from_u64s(&[1, 3, 3, 1]));
        assert_eq!(brute_clique(&Graph::empty(3)).unwrap(), Poly::from_u64s(&[1, 3]));
        assert_eq!(brute_clique(&fig1()).unwrap(), Poly::from_u64s(&[1, 6, 7, 1]));
    }

    #[test]
    fn covers() {
        assert_eq!(brute_cover(&fig1()).unwrap(), Poly::from_u64s(&[0, 0, 0, 2, 8, 6, 1]));
        assert_eq!(brute_cover(&Graph::complete(2)).unwrap(), Poly::from_u64s(&[0, 2, 1]));
        assert_eq!(brute_cover(&Graph::empty(2)).unwrap(), Poly::from_u64s(&[1, 2, 1]));
    }

    #[test]
    fn cuts() {
        assert_eq!(brute_cut(&Graph::complete(3)).unwrap(), Poly::from_u64s(&[1, 0, 3]));
        assert_eq!(brute_cut(&Graph::complete(2)).unwrap(), Poly::from_u64s(&[1, 1]));
        assert_eq!(brute_cut(&fig1()).unwrap(), Poly::from_u64s(&[1, 1, 4, 10, 9, 5, 2]));
    }
}
