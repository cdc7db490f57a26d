//! Sparse multivariate Laurent polynomials and coefficient extraction.
//!
//! The partition function of a graph is a product of simple binomial factors.
//! Rather than expanding it, [`nested_extraction`] multiplies the factors in
//! one at a time and extracts each variable's target exponent as soon as no
//! remaining factor mentions that variable, discarding terms that can no
//! longer reach the target.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Poly;

/// Live-term cap used when callers do not pass their own.
pub const DEFAULT_MAX_TERMS: usize = 1 << 22;

/// Indeterminates: the counting variable `z`, one variable per edge, and the
/// four per-edge variables of the linearized XOR system.
///
/// The derived order is `Z < Edge(0) < ... < Edge(m-1) < Xor(1, 0) < ... < Xor(4, m-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarId {
    Z,
    Edge(usize),
    Xor(u8, usize),
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Z => f.write_str("z"),
            VarId::Edge(e) => write!(f, "z[{e}]"),
            VarId::Xor(j, e) => write!(f, "z{j}[{e}]"),
        }
    }
}

/// Exponent vector, sorted by variable, zero exponents omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(VarId, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new<I: IntoIterator<Item = (VarId, i32)>>(powers: I) -> Self {
        let mut acc: BTreeMap<VarId, i32> = BTreeMap::new();
        for (v, e) in powers {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map_or(0, |i| self.0[i].1)
    }

    pub fn powers(&self) -> &[(VarId, i32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    fn without(&self, v: VarId) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with integer (possibly negative) exponents and
/// arbitrary-precision integer coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: HashMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Monomial::one(), BigInt::one())
    }

    pub fn term(mono: Monomial, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, coeff);
        p
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::new([(v, 1)]), BigInt::one())
    }

    /// `1 + mono`, the shape of every partition-function factor.
    pub fn one_plus(mono: Monomial) -> Self {
        let mut p = Self::one();
        p.add_term(mono, BigInt::one());
        p
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms sorted by monomial, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort();
        v
    }

    pub fn variables(&self) -> HashSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect()
    }

    /// Value with every variable set to 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `[v^e] p`: the polynomial multiplying `v^e`, with `v` removed.
    pub fn extract_coefficient(&self, v: VarId, e: i32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == e {
                out.add_term(m.without(v), c.clone());
            }
        }
        out
    }

    /// Product keeping only terms accepted by `keep`.
    fn mul_filtered(&self, other: &MultiPoly, keep: impl Fn(&Monomial) -> bool) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if keep(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    /// Reads the polynomial as a counting polynomial in `z` alone.
    pub fn to_counting_poly(&self) -> Result<Poly> {
        let mut coeffs: Vec<BigUint> = Vec::new();
        for (m, c) in &self.terms {
            let k = match m.0.as_slice() {
                [] => 0,
                [(VarId::Z, k)] if *k >= 0 => *k as usize,
                _ => return Err(Error::NotACountingPolynomial),
            };
            if c.sign() == Sign::Minus {
                return Err(Error::NotACountingPolynomial);
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigUint::zero());
            }
            coeffs[k] = c.magnitude().clone();
        }
        Ok(Poly::new(coeffs))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_filtered(rhs, |_| true)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A partition function kept as an unexpanded product.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorList {
    pub factors: Vec<MultiPoly>,
}

impl FactorList {
    pub fn new(factors: Vec<MultiPoly>) -> Self {
        FactorList { factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Full expansion; the empty product is 1.
    pub fn product(&self) -> MultiPoly {
        self.factors.iter().fold(MultiPoly::one(), |acc, f| &acc * f)
    }

    /// The same factors in the order given by `order`, a permutation of
    /// `0..len`.
    pub fn permuted(&self, order: &[usize]) -> FactorList {
        debug_assert_eq!(order.len(), self.len());
        FactorList::new(order.iter().map(|&i| self.factors[i].clone()).collect())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExtractOptions {
    /// Extract variables as soon as they are exhausted and drop terms over
    /// target. Requires every factor exponent of a non-`z` variable to be
    /// nonnegative.
    pub pruning: bool,
    pub max_terms: usize,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions {
            pruning: true,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

/// Coefficient of `prod_v v^targets[v]` in the product of `fl`, as a
/// polynomial in `z`.
///
/// Every variable other than `z` that occurs in a factor needs a target. An
/// unreachable target yields the zero polynomial.
pub fn nested_extraction(
    fl: &FactorList,
    targets: &BTreeMap<VarId, i32>,
    opts: ExtractOptions,
) -> Result<Poly> {
    let mut last_use: HashMap<VarId, usize> = HashMap::new();
    for (i, f) in fl.factors.iter().enumerate() {
        for (m, _) in f.terms() {
            for &(v, e) in m.powers() {
                if v == VarId::Z {
                    continue;
                }
                if !targets.contains_key(&v) {
                    return Err(Error::MissingTarget(v.to_string()));
                }
                if opts.pruning && e < 0 {
                    return Err(Error::NegativeExponent(v.to_string()));
                }
                last_use.insert(v, i);
            }
        }
    }
    let mut exhausted_at: Vec<Vec<VarId>> = vec![Vec::new(); fl.len()];
    for (&v, &i) in &last_use {
        exhausted_at[i].push(v);
    }
    for list in &mut exhausted_at {
        list.sort();
    }

    let over_limit = || Error::WorkLimit {
        route: "coefficient extraction",
        limit: opts.max_terms,
        hint: "use the enumeration route or raise --max-work",
    };

    let mut acc = MultiPoly::one();
    for (i, f) in fl.factors.iter().enumerate() {
        acc = if opts.pruning {
            acc.mul_filtered(f, |m| {
                m.powers()
                    .iter()
                    .all(|&(v, e)| v == VarId::Z || e <= targets[&v])
            })
        } else {
            &acc * f
        };
        if opts.pruning {
            for &v in exhausted_at[i].iter().rev() {
                acc = acc.extract_coefficient(v, targets[&v]);
            }
        }
        if acc.len() > opts.max_terms {
            return Err(over_limit());
        }
        if acc.is_zero() {
            return Ok(Poly::zero());
        }
    }

    // Innermost bracket first: highest variable in canonical order.
    for (&v, &e) in targets.iter().rev() {
        if v == VarId::Z || (opts.pruning && last_use.contains_key(&v)) {
            continue;
        }
        acc = acc.extract_coefficient(v, e);
    }
    acc.to_counting_poly()
}

/// `prod_v (1 + z Z_v) prod_e (1 + z_e)`, vertex factors first, both in
/// canonical order.
pub fn build_partition_function(g: &Graph) -> FactorList {
    let mut factors = Vec::with_capacity(g.order() + g.size());
    for v in g.vertices() {
        let powers = std::iter::once((VarId::Z, 1)).chain(
            g.neighbors(v)
                .iter()
                .map(|&w| (VarId::Edge(g.edge_index(v, w).unwrap()), 1)),
        );
        factors.push(MultiPoly::one_plus(Monomial::new(powers)));
    }
    for e in 0..g.size() {
        factors.push(MultiPoly::one_plus(Monomial::new([(VarId::Edge(e), 1)])));
    }
    FactorList::new(factors)
}

/// Factor order for extraction from [`build_partition_function`]: each vertex
/// factor is followed by the factors of the edges that join it to an earlier
/// vertex, which exhausts those edge variables immediately.
fn frontier_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut order = Vec::with_capacity(n + g.size());
    for v in g.vertices() {
        order.push(v - 1);
        for (e, &(_, hi)) in g.edges().iter().enumerate() {
            if hi == v {
                order.push(n + e);
            }
        }
    }
    order
}

fn uniform_edge_targets(g: &Graph, exponent: i32) -> BTreeMap<VarId, i32> {
    (0..g.size()).map(|e| (VarId::Edge(e), exponent)).collect()
}

/// Independence polynomial as `[prod_e z_e] Psi`.
pub fn indep_poly_by_extraction(g: &Graph, max_terms: usize) -> Result<Poly> {
    let fl = build_partition_function(g).permuted(&frontier_order(g));
    nested_extraction(
        &fl,
        &uniform_edge_targets(g, 1),
        ExtractOptions {
            pruning: true,
            max_terms,
        },
    )
}

/// Vertex-cover polynomial as `[prod_e z_e^2] Psi`.
pub fn cover_poly_by_extraction(g: &Graph, max_terms: usize) -> Result<Poly> {
    let fl = build_partition_function(g).permuted(&frontier_order(g));
    nested_extraction(
        &fl,
        &uniform_edge_targets(g, 2),
        ExtractOptions {
            pruning: true,
            max_terms,
        },
    )
}
