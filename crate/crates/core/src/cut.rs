//! Bipartite-cut polynomial.
//!
//! `D_k` counts unordered bipartitions `{L, R}` of the vertex set with exactly
//! `k` crossing edges. Two independent routes compute it:
//!
//! * [`cut_polynomial_laurent`] linearizes `x_uv = x_u XOR x_v` with four
//!   slack equations per edge, writes the solution count as a coefficient of
//!   a product of Laurent binomials, shifts every factor to nonnegative
//!   exponents and runs [`nested_extraction`].
//! * [`cut_polynomial_xor`] walks all `2^(n-1)` vertex assignments with
//!   vertex 1 pinned, in Gray-code order.
//!
//! The linear system has exactly one solution per ordered assignment `x_V`,
//! so the Laurent route's raw coefficient is halved.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Zero, One};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::multipoly::{nested_extraction, ExtractOptions, FactorList, Monomial, MultiPoly, VarId};
use crate::poly::Poly;

/// Largest order accepted by the Gray-code enumeration.
pub const XOR_MAX_ORDER: usize = 30;

/// The linearized XOR system `A x = b` for one target cut size `k`.
///
/// Columns are `(x_V, x_E, s_E, t_E, y_E, w_E)`; row 0 sums `x_E`, then four
/// blocks of `m` rows hold the `s`, `t`, `y` and `w` equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSystem {
    pub n: usize,
    pub m: usize,
    pub a: Vec<Vec<i64>>,
    pub b: Vec<i64>,
}

impl CutSystem {
    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.n + 5 * self.m
    }

    pub fn is_solution(&self, x: &[i64]) -> bool {
        x.len() == self.cols()
            && self
                .a
                .iter()
                .zip(&self.b)
                .all(|(row, &rhs)| row.iter().zip(x).map(|(a, x)| a * x).sum::<i64>() == rhs)
    }

    /// The unique binary solution vector induced by a vertex assignment
    /// (`sides[v - 1]` in {0, 1}).
    pub fn solution_for(g: &Graph, sides: &[u8]) -> Vec<i64> {
        let (n, m) = (g.order(), g.size());
        let mut x = vec![0i64; n + 5 * m];
        for (j, &s) in sides.iter().enumerate() {
            x[j] = s as i64;
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let (xu, xv) = (sides[u - 1] as i64, sides[v - 1] as i64);
            let xuv = xu ^ xv;
            x[n + e] = xuv;
            x[n + m + e] = (2 - xu - xv + xuv) / 2;
            x[n + 2 * m + e] = (2 + xu - xv - xuv) / 2;
            x[n + 3 * m + e] = (2 - xu + xv - xuv) / 2;
            x[n + 4 * m + e] = (2 - xu - xv - xuv) / 2;
        }
        x
    }
}

/// One edge's slack block: `(x_u, x_v, x_uv, s, t, y, w)`.
pub type XorTuple = [u8; 7];

fn slack_equations_hold(t: &XorTuple) -> bool {
    let [xu, xv, xuv, s, tt, y, w] = t.map(i32::from);
    xu + xv - xuv + 2 * s == 2
        && -xu + xv + xuv + 2 * tt == 2
        && xu - xv + xuv + 2 * y == 2
        && xu + xv + xuv + 2 * w == 2
}

/// Every binary 7-tuple satisfying the four slack equations, by exhaustive
/// search over `{0,1}^7`, in lexicographic order.
pub fn xor_truth_table_check() -> Vec<XorTuple> {
    (0u8..128)
        .map(|bits| std::array::from_fn(|i| (bits >> (6 - i)) & 1))
        .filter(slack_equations_hold)
        .collect()
}

pub fn build_cut_system(g: &Graph, k: i64) -> CutSystem {
    let (n, m) = (g.order(), g.size());
    let inc = g.incidence_matrices();
    let cols = n + 5 * m;
    let mut a = Vec::with_capacity(4 * m + 1);
    let mut first = vec![0i64; cols];
    for x in &mut first[n..n + m] {
        *x = 1;
    }
    a.push(first);
    // (vertex block sign source, x_E coefficient), one per slack family
    let blocks: [(&Vec<Vec<i8>>, i64, i64); 4] =
        [(&inc.c, 1, -1), (&inc.d, 1, 1), (&inc.d, -1, 1), (&inc.c, 1, 1)];
    for (blk, (mat, sign, xe)) in blocks.into_iter().enumerate() {
        for e in 0..m {
            let mut row = vec![0i64; cols];
            for j in 0..n {
                row[j] = sign * mat[e][j] as i64;
            }
            row[n + e] = xe;
            row[n + (blk + 1) * m + e] = 2;
            a.push(row);
        }
    }
    let mut b = vec![2i64; 4 * m + 1];
    b[0] = k;
    CutSystem { n, m, a, b }
}

/// `Z_v` for the cut partition function: exponents over the `4m` XOR
/// variables, stored `j`-major (`exponents[(j - 1) * m + e]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentVertexMonomial {
    pub vertex: usize,
    pub m: usize,
    pub exponents: Vec<i8>,
}

impl LaurentVertexMonomial {
    pub fn exponent(&self, j: u8, e: usize) -> i8 {
        self.exponents[(j as usize - 1) * self.m + e]
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.exponents.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| {
            (VarId::Xor((i / self.m) as u8 + 1, i % self.m), x as i32)
        }))
    }
}

/// Column `v` of the stacked matrix `[C; D; -D; C]`, one monomial per vertex.
pub fn laurent_vertex_monomials(g: &Graph) -> Vec<LaurentVertexMonomial> {
    let m = g.size();
    let inc = g.incidence_matrices();
    g.vertices()
        .map(|v| {
            let j = v - 1;
            let mut exponents = vec![0i8; 4 * m];
            for e in 0..m {
                exponents[e] = inc.c[e][j];
                exponents[m + e] = inc.d[e][j];
                exponents[2 * m + e] = -inc.d[e][j];
                exponents[3 * m + e] = inc.c[e][j];
            }
            LaurentVertexMonomial {
                vertex: v,
                m,
                exponents,
            }
        })
        .collect()
}

fn xor(j: u8, e: usize) -> VarId {
    VarId::Xor(j, e)
}

/// Laurent partition function of the linearized cut system, in order: one
/// factor `1 + z z1^-1 z2 z3 z4` per edge, four slack factors `1 + zj^2` per
/// edge, then `1 + Z_v` per vertex.
pub fn cut_partition_factors(g: &Graph) -> FactorList {
    let m = g.size();
    let mut factors = Vec::with_capacity(5 * m + g.order());
    for e in 0..m {
        factors.push(MultiPoly::one_plus(Monomial::new([
            (VarId::Z, 1),
            (xor(1, e), -1),
            (xor(2, e), 1),
            (xor(3, e), 1),
            (xor(4, e), 1),
        ])));
    }
    for e in 0..m {
        for j in 1..=4 {
            factors.push(MultiPoly::one_plus(Monomial::new([(xor(j, e), 2)])));
        }
    }
    for lv in laurent_vertex_monomials(g) {
        factors.push(MultiPoly::one_plus(lv.monomial()));
    }
    FactorList::new(factors)
}

/// `phi = prod_e z1 z2 z3` as a monomial.
pub fn phi(g: &Graph) -> Monomial {
    Monomial::new((0..g.size()).flat_map(|e| [(xor(1, e), 1), (xor(2, e), 1), (xor(3, e), 1)]))
}

/// [`cut_partition_factors`] with `phi` distributed over the factors so that
/// no exponent is negative: each edge factor absorbs `z1`, and each vertex
/// factor absorbs `z2` of the edges where it is the smaller endpoint and `z3`
/// where it is the larger one. The product equals `phi * Psi`.
pub fn shifted_cut_factors(g: &Graph) -> FactorList {
    let (n, m) = (g.order(), g.size());
    let mut fl = cut_partition_factors(g);
    for e in 0..m {
        let shift = MultiPoly::var(xor(1, e));
        fl.factors[e] = &fl.factors[e] * &shift;
    }
    let mut vertex_shift = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        vertex_shift[u - 1].push((xor(2, e), 1));
        vertex_shift[v - 1].push((xor(3, e), 1));
    }
    for (j, powers) in vertex_shift.into_iter().enumerate() {
        let shift = MultiPoly::term(Monomial::new(powers), BigInt::one());
        let idx = 5 * m + j;
        fl.factors[idx] = &fl.factors[idx] * &shift;
    }
    fl
}

/// Extraction schedule for [`shifted_cut_factors`]: after vertex `v`, the
/// edge and slack factors of every edge whose larger endpoint is `v`.
fn cut_frontier_order(g: &Graph) -> Vec<usize> {
    let m = g.size();
    let mut order = Vec::with_capacity(5 * m + g.order());
    for v in g.vertices() {
        order.push(5 * m + v - 1);
        for (e, &(_, hi)) in g.edges().iter().enumerate() {
            if hi == v {
                order.push(e);
                order.extend((0..4).map(|j| m + 4 * e + j));
            }
        }
    }
    order
}

/// Targets after the `phi` shift: `z1, z2, z3` to the third, `z4` squared.
pub fn shifted_targets(g: &Graph) -> BTreeMap<VarId, i32> {
    (0..g.size())
        .flat_map(|e| [(xor(1, e), 3), (xor(2, e), 3), (xor(3, e), 3), (xor(4, e), 2)])
        .collect()
}

/// Targets before the shift: every XOR variable squared.
pub fn unshifted_targets(g: &Graph) -> BTreeMap<VarId, i32> {
    (0..g.size())
        .flat_map(|e| (1..=4).map(move |j| (xor(j, e), 2)))
        .collect()
}

/// Turns an ordered-assignment count into an unordered-bipartition count.
pub(crate) fn halve(raw: &Poly) -> Poly {
    let two = BigUint::from(2u8);
    Poly::new(
        raw.coeffs()
            .iter()
            .map(|c| {
                debug_assert!((c % &two).is_zero(), "raw cut count {c} is odd");
                c / &two
            })
            .collect(),
    )
}

pub fn cut_polynomial_laurent(g: &Graph, max_terms: usize) -> Result<Poly> {
    if g.order() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let fl = shifted_cut_factors(g).permuted(&cut_frontier_order(g));
    let raw = nested_extraction(
        &fl,
        &shifted_targets(g),
        ExtractOptions {
            pruning: true,
            max_terms,
        },
    )
    .map_err(|e| match e {
        Error::WorkLimit { limit, .. } => Error::WorkLimit {
            route: "Laurent cut extraction",
            limit,
            hint: "use --method xor",
        },
        other => other,
    })?;
    Ok(halve(&raw))
}

pub fn cut_polynomial_xor(g: &Graph) -> Result<Poly> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if n > XOR_MAX_ORDER {
        return Err(Error::TooLarge {
            route: "XOR enumeration",
            n,
            limit: XOR_MAX_ORDER,
        });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << (w - 1)))
        .collect();
    let mut counts = vec![0u64; g.size() + 1];
    let mut side = 0u32;
    let mut cut = 0usize;
    counts[0] += 1;
    // Gray code over vertices 2..=n; step i flips vertex 2 + trailing_zeros(i).
    for i in 1u64..(1u64 << (n - 1)) {
        let j = i.trailing_zeros() as usize + 1;
        let bit = 1u32 << j;
        let opposite = if side & bit == 0 { side } else { !side };
        let crossing = (adj[j] & opposite).count_ones() as usize;
        cut = cut + adj[j].count_ones() as usize - 2 * crossing;
        side ^= bit;
        counts[cut] += 1;
    }
    Ok(Poly::new(counts.into_iter().map(BigUint::from).collect()))
}

/// `p'(1) / p(1)`, the mean cut size over uniformly random bipartitions.
pub fn expected_random_cut(p: &Poly) -> Result<BigRational> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(BigRational::new(
        BigInt::from(p.derivative_at_one()),
        BigInt::from(p.sum()),
    ))
}
