//! Counting polynomials of simple undirected graphs.
//!
//! * independence polynomial, by elementary symmetric polynomials of vertex
//!   monomials in nilpotent edge variables ([`indep`]) and by coefficient
//!   extraction from a product-form partition function ([`multipoly`]);
//! * clique and vertex-cover polynomials ([`derived`]);
//! * bipartite-cut polynomial, by Laurent coefficient extraction and by XOR
//!   enumeration ([`cut`]);
//! * brute-force references for all four ([`oracle`]).

pub mod cut;
pub mod derived;
pub mod error;
pub mod graph;
pub mod indep;
pub mod multipoly;
pub mod nilalgebra;
pub mod oracle;
pub mod poly;
pub mod random;

pub use cut::{cut_polynomial_laurent, cut_polynomial_xor, expected_random_cut};
pub use derived::{clique_number, clique_polynomial, covering_number, vertex_cover_polynomial};
pub use error::{Error, Result};
pub use graph::{parse_dimacs, parse_edge_list, Graph, IncidencePair, Vertex};
pub use indep::{
    enumerate_independent_sets, independence_number, maximal_independent_sets, independence_polynomial, nilpotency_index,
    UNLIMITED,
};
pub use multipoly::{
    cover_poly_by_extraction, indep_poly_by_extraction, MultiPoly, VarId, DEFAULT_MAX_TERMS,
};
pub use nilalgebra::{EdgeSet, NilLayer};
pub use poly::Poly;
