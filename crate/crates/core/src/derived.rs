//! Clique and vertex-cover polynomials, both read off an independence
//! polynomial.

use crate::graph::Graph;
use crate::indep::independence_polynomial;
use crate::poly::Poly;

/// Cliques of `g` are the independent sets of its complement.
pub fn clique_polynomial(g: &Graph) -> Poly {
    independence_polynomial(&g.complement())
}

pub fn clique_number(g: &Graph) -> usize {
    clique_polynomial(g).degree().unwrap_or(0)
}

/// `B_k = A_{n-k}`: a vertex set covers every edge iff its complement is
/// independent.
pub fn vertex_cover_polynomial(g: &Graph) -> Poly {
    cover_from_independence(&independence_polynomial(g), g.order())
}

/// Reverses an independence polynomial inside the degree frame `n`.
pub fn cover_from_independence(indep: &Poly, n: usize) -> Poly {
    indep.reversed(n)
}

/// Order of a minimum vertex cover.
pub fn covering_number(g: &Graph) -> usize {
    vertex_cover_polynomial(g)
        .low_degree()
        .expect("V itself is a cover")
}
