use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

use nilgraph_core::cut::{build_cut_system, shifted_cut_factors, shifted_targets, xor_truth_table_check, CutSystem};
use nilgraph_core::indep::{elementary_symmetric, vertex_monomial_product};
use nilgraph_core::multipoly::{build_partition_function, nested_extraction, ExtractOptions, Monomial};
use nilgraph_core::oracle::{brute_clique, brute_cover, brute_cut, brute_independence};
use nilgraph_core::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_nonempty_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("needs a vertex", |g| g.order() > 0)
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.order(), g.edges().iter().map(|&(u, v)| (perm[u - 1], perm[v - 1]))).unwrap()
}

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn independence_matches_oracle(g in arb_graph(12)) {
        let a = independence_polynomial(&g);
        prop_assert_eq!(&a, &brute_independence(&g).unwrap());
        let (n, m) = (g.order(), g.size());
        prop_assert_eq!(a.coeff(0), big(1));
        prop_assert_eq!(a.coeff(1), big(n));
        prop_assert_eq!(a.coeff(2), big(n * n.saturating_sub(1) / 2 - m));
        for k in 0..=n {
            prop_assert_eq!(big(enumerate_independent_sets(&g, k).unwrap().len()), a.coeff(k));
        }
    }

    #[test]
    fn vertex_order_is_irrelevant(g in arb_graph(10), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (1..=g.order()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(independence_polynomial(&relabel(&g, &perm)), independence_polynomial(&g));
    }

    #[test]
    fn isolated_vertex_multiplies_by_one_plus_z(g in arb_graph(10)) {
        let bigger = Graph::new(g.order() + 1, g.edges().iter().copied()).unwrap();
        let a = independence_polynomial(&g);
        let want: Vec<BigUint> = (0..=g.order() + 1).map(|k| {
            a.coeff(k) + if k > 0 { a.coeff(k - 1) } else { big(0) }
        }).collect();
        prop_assert_eq!(independence_polynomial(&bigger), Poly::new(want));
    }

    #[test]
    fn derived_polynomials(g in arb_graph(11)) {
        let n = g.order();
        prop_assert_eq!(clique_polynomial(&g), brute_clique(&g).unwrap());
        let b = vertex_cover_polynomial(&g);
        prop_assert_eq!(&b, &brute_cover(&g).unwrap());
        let a = independence_polynomial(&g);
        for k in 0..=n {
            prop_assert_eq!(b.coeff(k), a.coeff(n - k));
        }
        prop_assert_eq!(independence_number(&g) + covering_number(&g), n);
        for k in 0..=independence_number(&g) {
            for set in enumerate_independent_sets(&g, k).unwrap() {
                let cover: Vec<Vertex> = g.vertices().filter(|v| !set.contains(v)).collect();
                prop_assert!(g.edges().iter().all(|(u, v)| cover.contains(u) || cover.contains(v)));
            }
        }
    }

    #[test]
    fn oracles_agree_with_each_other(g in arb_graph(10)) {
        let n = g.order();
        let a = brute_independence(&g).unwrap();
        let b = brute_cover(&g).unwrap();
        for k in 0..=n {
            prop_assert_eq!(b.coeff(k), a.coeff(n - k));
        }
        prop_assert_eq!(brute_clique(&g).unwrap(), brute_independence(&g.complement()).unwrap());
    }

    #[test]
    fn complement_involution(g in arb_graph(12)) {
        let n = g.order();
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.size() + g.complement().size(), n * n.saturating_sub(1) / 2);
        let inc = g.incidence_matrices();
        for (c, d) in inc.c.iter().zip(&inc.d) {
            prop_assert_eq!(c.iter().map(|&x| x as i32).sum::<i32>(), 2);
            prop_assert_eq!(d.iter().map(|&x| x as i32).sum::<i32>(), 0);
        }
    }

    #[test]
    fn edge_list_roundtrip(g in arb_graph(12)) {
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn nilpotency(g in arb_graph(9)) {
        let alpha = independence_number(&g);
        prop_assert_eq!(nilpotency_index(&g), alpha + 1);
        let witness = &enumerate_independent_sets(&g, alpha).unwrap()[0];
        prop_assert!(vertex_monomial_product(&g, witness).unwrap().is_some());
        for set in subsets_of_size(g.order(), alpha + 1) {
            prop_assert!(vertex_monomial_product(&g, &set).unwrap().is_none());
        }
        if g.vertices().all(|v| g.degree(v) > 0) {
            // repetition allowed: a repeated non-isolated vertex squares an edge
            for v in g.vertices() {
                prop_assert!(vertex_monomial_product(&g, &[v, v]).unwrap().is_none());
            }
        }
    }

    #[test]
    fn extraction_routes_match(g in arb_graph(9)) {
        prop_assert_eq!(indep_poly_by_extraction(&g, DEFAULT_MAX_TERMS).unwrap(), independence_polynomial(&g));
        prop_assert_eq!(cover_poly_by_extraction(&g, DEFAULT_MAX_TERMS).unwrap(), vertex_cover_polynomial(&g));
    }

    #[test]
    fn cut_routes_and_identities(g in arb_nonempty_graph(7)) {
        let xor = cut_polynomial_xor(&g).unwrap();
        prop_assert_eq!(&xor, &brute_cut(&g).unwrap());
        prop_assert_eq!(&cut_polynomial_laurent(&g, DEFAULT_MAX_TERMS).unwrap(), &xor);
        prop_assert_eq!(xor.sum(), BigUint::from(1u64) << (g.order() - 1));
        prop_assert_eq!(
            expected_random_cut(&xor).unwrap(),
            BigRational::new(BigInt::from(g.size()), BigInt::from(2))
        );
    }

    #[test]
    fn cut_system_solutions_project_to_truth_table(g in arb_nonempty_graph(8), mask in any::<u32>()) {
        let sides: Vec<u8> = (0..g.order()).map(|j| (mask >> j & 1) as u8).collect();
        let x = CutSystem::solution_for(&g, &sides);
        let (n, m) = (g.order(), g.size());
        let k: i64 = x[n..n + m].iter().sum();
        prop_assert!(build_cut_system(&g, k).is_solution(&x));
        prop_assert!(!build_cut_system(&g, k + 1).is_solution(&x));
        let table = xor_truth_table_check();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let t: [u8; 7] = [
                sides[u - 1], sides[v - 1], x[n + e] as u8,
                x[n + m + e] as u8, x[n + 2 * m + e] as u8, x[n + 3 * m + e] as u8, x[n + 4 * m + e] as u8,
            ];
            prop_assert!(table.contains(&t));
        }
    }

    #[test]
    fn esp_table_matches_product(x in proptest::collection::vec(-3i64..=3, 0..=8)) {
        let xs: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let e = elementary_symmetric(&xs);
        let mut prod = MultiPoly::one();
        for xi in &xs {
            let mut f = MultiPoly::one();
            f.add_term(Monomial::new([(VarId::Z, 1)]), xi.clone());
            prod = &prod * &f;
        }
        for (l, el) in e.iter().enumerate() {
            let mono = Monomial::new([(VarId::Z, l as i32)]);
            prop_assert_eq!(&prod.coeff(&mono), el);
        }
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect())
        .collect()
}

#[test]
fn cut_structure_on_known_families() {
    for n in [3usize, 5, 7] {
        let c = cut_polynomial_xor(&Graph::cycle(n)).unwrap();
        assert_eq!(c.coeff(n), big(0), "odd cycle C{n} has no full cut");
    }
    for n in [4usize, 6] {
        let c = cut_polynomial_xor(&Graph::cycle(n)).unwrap();
        assert!(c.coeff(n) >= big(1));
    }
    let q3 = Graph::hypercube(3);
    assert!(cut_polynomial_xor(&q3).unwrap().coeff(12) >= big(1));
}

#[test]
fn pruning_is_sound_on_small_graphs() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let n = 1 + rand::Rng::gen_range(&mut rng, 0..8usize);
        let g = nilgraph_core::random::erdos_renyi(&mut rng, n, 0.2);
        if g.size() > 9 {
            continue;
        }
        let fl = build_partition_function(&g);
        for target in [1, 2, 3] {
            let targets: BTreeMap<_, _> = (0..g.size()).map(|e| (VarId::Edge(e), target)).collect();
            let on = nested_extraction(&fl, &targets, ExtractOptions::default()).unwrap();
            let off = nested_extraction(
                &fl,
                &targets,
                ExtractOptions { pruning: false, ..Default::default() },
            )
            .unwrap();
            assert_eq!(on, off, "target {target} on {g:?}");
        }
    }
}

#[test]
fn shifted_cut_factors_are_nonnegative() {
    let g = parse_edge_list("1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6").unwrap();
    for f in &shifted_cut_factors(&g).factors {
        for (m, _) in f.terms() {
            assert!(m.powers().iter().all(|&(_, e)| e >= 0));
        }
    }
    assert_eq!(shifted_targets(&g).len(), 28);
}
