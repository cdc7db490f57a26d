//! Independence polynomial through elementary symmetric polynomials of the
//! vertex monomials, evaluated with nilpotent edge variables.
//!
//! Vertex `v` contributes the monomial `Z_v = prod_{e incident to v} z_e`.
//! The degree-`k` elementary symmetric polynomial of `Z_1, ..., Z_n` keeps
//! exactly the products of `k` pairwise non-adjacent vertices once every
//! `z_e^2` is set to zero, so its term count is the number of independent
//! sets of order `k`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::nilalgebra::{layer_extend, nil_product, EdgeSet, NilLayer};
use crate::poly::Poly;

/// No cap on live terms.
pub const UNLIMITED: usize = usize::MAX;

/// Layers of the nilpotent ESP recursion; `layers[l]` is `e_l` of the vertex
/// monomials processed so far.
#[derive(Clone, Debug)]
pub struct EspState {
    pub layers: Vec<NilLayer>,
}

impl EspState {
    fn new(width: usize) -> Self {
        EspState {
            layers: vec![NilLayer::unit(width)],
        }
    }

    /// Folds one more vertex monomial into every layer, highest degree first
    /// so each step reads the previous column of the recursion table.
    pub fn push_monomial(&mut self, zv: &EdgeSet) {
        let top = self.layers.len();
        let grown = layer_extend(&self.layers[top - 1], zv);
        for l in (1..top).rev() {
            let ext = layer_extend(&self.layers[l - 1], zv);
            self.layers[l].merge(ext);
        }
        if !grown.is_empty() {
            self.layers.push(grown);
        }
    }

    /// Distinct monomials held across all layers.
    pub fn live_terms(&self) -> usize {
        self.layers.iter().map(NilLayer::distinct).sum()
    }

    pub fn term_counts(&self) -> Vec<BigUint> {
        self.layers.iter().map(NilLayer::term_count).collect()
    }
}

/// Vertex monomials `Z_1, ..., Z_n` in label order.
pub fn vertex_monomials(g: &Graph) -> Vec<EdgeSet> {
    g.vertices()
        .map(|v| g.incident_edges(v).expect("label in range"))
        .collect()
}

pub fn esp_nil_recursion(g: &Graph) -> EspState {
    esp_nil_recursion_bounded(g, UNLIMITED).expect("unbounded recursion cannot hit the work limit")
}

/// As [`esp_nil_recursion`], failing once more than `max_terms` distinct
/// monomials are live.
pub fn esp_nil_recursion_bounded(g: &Graph, max_terms: usize) -> Result<EspState> {
    let mut state = EspState::new(g.size());
    for zv in vertex_monomials(g) {
        state.push_monomial(&zv);
        if state.live_terms() > max_terms {
            return Err(Error::WorkLimit {
                route: "nilpotent ESP recursion",
                limit: max_terms,
                hint: "raise --max-work",
            });
        }
    }
    Ok(state)
}

pub fn independence_polynomial(g: &Graph) -> Poly {
    Poly::new(esp_nil_recursion(g).term_counts())
}

pub fn independence_polynomial_bounded(g: &Graph, max_terms: usize) -> Result<Poly> {
    Ok(Poly::new(esp_nil_recursion_bounded(g, max_terms)?.term_counts()))
}

/// Order of a maximum independent set.
pub fn independence_number(g: &Graph) -> usize {
    esp_nil_recursion(g).layers.len() - 1
}

/// Product of the vertex monomials of `vertices`; `None` when it vanishes.
pub fn vertex_monomial_product(g: &Graph, vertices: &[Vertex]) -> Result<Option<EdgeSet>> {
    let mut acc = EdgeSet::empty(g.size());
    for &v in vertices {
        match nil_product(&acc, &g.incident_edges(v)?) {
            Some(p) => acc = p,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

/// Nilpotency index of the algebra generated by the vertex monomials,
/// `1 + alpha`.
///
/// The recursion stops producing terms exactly at degree `alpha + 1`, which
/// is the statement that every product of `alpha + 1` distinct vertex
/// monomials vanishes; a maximum independent set supplies a nonzero product
/// of `alpha` of them. With isolated vertices the monomial 1 is among the
/// generators, so the index only holds for products of distinct generators.
pub fn nilpotency_index(g: &Graph) -> usize {
    let state = esp_nil_recursion(g);
    let alpha = state.layers.len() - 1;
    debug_assert!(state.layers[alpha].iter().next().is_some());
    alpha + 1
}

/// All independent sets of order `k`, each sorted, in lexicographic order.
///
/// Runs the same recursion as [`esp_nil_recursion`] but keeps every
/// surviving product separately together with the vertices that formed it.
pub fn enumerate_independent_sets(g: &Graph, k: usize) -> Result<Vec<Vec<Vertex>>> {
    if k > g.order() {
        return Err(Error::OrderOutOfRange { k, n: g.order() });
    }
    let mut layers: Vec<Vec<(EdgeSet, Vec<Vertex>)>> = vec![vec![(EdgeSet::empty(g.size()), Vec::new())]];
    for (zv, v) in vertex_monomials(g).into_iter().zip(g.vertices()) {
        let top = layers.len().min(k);
        for l in (1..=top).rev() {
            let ext: Vec<_> = layers[l - 1]
                .iter()
                .filter_map(|(set, members)| {
                    nil_product(set, &zv).map(|p| {
                        let mut members = members.clone();
                        members.push(v);
                        (p, members)
                    })
                })
                .collect();
            if ext.is_empty() {
                continue;
            }
            if l == layers.len() {
                layers.push(ext);
            } else {
                layers[l].extend(ext);
            }
        }
    }
    let mut sets: Vec<Vec<Vertex>> = layers
        .into_iter()
        .nth(k)
        .unwrap_or_default()
        .into_iter()
        .map(|(_, members)| members)
        .collect();
    sets.sort();
    Ok(sets)
}

/// Independent sets that no vertex can extend, collected from the
/// per-order enumeration lists.
pub fn maximal_independent_sets(g: &Graph) -> Vec<Vec<Vertex>> {
    let alpha = independence_number(g);
    let mut out = Vec::new();
    for k in 0..=alpha {
        for set in enumerate_independent_sets(g, k).expect("k <= alpha <= n") {
            let blocked = g
                .vertices()
                .filter(|v| set.binary_search(v).is_err())
                .all(|w| set.iter().any(|&u| g.is_adjacent(u, w)));
            if blocked {
                out.push(set);
            }
        }
    }
    out
}

/// `e_0(x), ..., e_k(x)` by filling the `(k+1) x (k+1)` table
/// `e[l][j] = e[l][j-1] + x_j e[l-1][j-1]` column by column.
pub fn elementary_symmetric(x: &[BigInt]) -> Vec<BigInt> {
    let k = x.len();
    let mut table = vec![vec![BigInt::zero(); k + 1]; k + 1];
    for col in table[0].iter_mut() {
        *col = BigInt::one();
    }
    for j in 1..=k {
        for l in 1..=k {
            table[l][j] = &table[l][j - 1] + &x[j - 1] * &table[l - 1][j - 1];
        }
    }
    table.into_iter().map(|row| row[k].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn fig1() -> Graph {
        parse_edge_list("1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6").unwrap()
    }

    fn counts(state: &EspState) -> Vec<u64> {
        state
            .term_counts()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn recursion_layers() {
        assert_eq!(counts(&esp_nil_recursion(&fig1()))[3], 2);
        assert_eq!(counts(&esp_nil_recursion(&Graph::empty(3))), vec![1, 3, 3, 1]);
        let k3 = esp_nil_recursion(&Graph::complete(3));
        assert_eq!(k3.layers.len(), 2);
    }

    #[test]
    fn polynomials() {
        assert_eq!(independence_polynomial(&fig1()), Poly::from_u64s(&[1, 6, 8, 2]));
        assert_eq!(independence_polynomial(&Graph::complete(2)), Poly::from_u64s(&[1, 2]));
        // subsets of {1,2,3} with no pair {1,2} or {2,3}: {}, 3 singletons, {1,3}
        assert_eq!(independence_polynomial(&Graph::path(3)), Poly::from_u64s(&[1, 3, 1]));
        assert_eq!(independence_polynomial(&Graph::empty(0)), Poly::from_u64s(&[1]));
    }

    #[test]
    fn numbers() {
        assert_eq!(independence_number(&fig1()), 3);
        assert_eq!(independence_number(&Graph::complete(5)), 1);
        assert_eq!(independence_number(&Graph::empty(4)), 4);
        assert_eq!(nilpotency_index(&fig1()), 4);
        assert_eq!(nilpotency_index(&Graph::complete(3)), 2);
        // C5: brute force over 32 subsets gives alpha = 2
        assert_eq!(nilpotency_index(&Graph::cycle(5)), 3);
    }

    #[test]
    fn enumeration() {
        let g = fig1();
        assert_eq!(
            enumerate_independent_sets(&g, 3).unwrap(),
            vec![vec![1, 4, 5], vec![2, 4, 5]]
        );
        assert_eq!(enumerate_independent_sets(&g, 0).unwrap(), vec![Vec::<Vertex>::new()]);
        assert!(enumerate_independent_sets(&g, 4).unwrap().is_empty());
        assert_eq!(
            enumerate_independent_sets(&g, 7),
            Err(Error::OrderOutOfRange { k: 7, n: 6 })
        );
        assert_eq!(enumerate_independent_sets(&Graph::empty(3), 2).unwrap().len(), 3);
    }

    #[test]
    fn hypercube_maximal_sets() {
        let sets = maximal_independent_sets(&Graph::hypercube(3));
        let mut orders: Vec<usize> = sets.iter().map(Vec::len).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 2, 2, 2, 4, 4]);
        assert_eq!(maximal_independent_sets(&Graph::empty(0)), vec![Vec::<Vertex>::new()]);
    }

    #[test]
    fn isolated_vertices_multiply_by_one_plus_z() {
        let g = parse_edge_list("n 8\n1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6").unwrap();
        // (1 + z)^2 (1 + 6z + 8z^2 + 2z^3)
        assert_eq!(
            independence_polynomial(&g),
            Poly::from_u64s(&[1, 8, 21, 24, 12, 2])
        );
    }

    #[test]
    fn witness_products() {
        let g = fig1();
        assert!(vertex_monomial_product(&g, &[1, 4, 5]).unwrap().is_some());
        assert!(vertex_monomial_product(&g, &[1, 2]).unwrap().is_none());
        assert!(vertex_monomial_product(&g, &[4, 4]).unwrap().is_none());
    }

    #[test]
    fn work_limit() {
        assert!(matches!(
            independence_polynomial_bounded(&fig1(), 5),
            Err(Error::WorkLimit { limit: 5, .. })
        ));
        assert!(independence_polynomial_bounded(&fig1(), 1000).is_ok());
    }

    #[test]
    fn integer_esp() {
        let x: Vec<BigInt> = [2, -1, 3].iter().map(|&v| BigInt::from(v)).collect();
        // (1+2z)(1-z)(1+3z) = 1 + 4z + z^2 - 6z^3
        let want: Vec<BigInt> = [1, 4, 1, -6].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(elementary_symmetric(&x), want);
        assert_eq!(elementary_symmetric(&[]), vec![BigInt::one()]);
    }
}
