//! Squarefree monomials in edge variables under the rule `z_e^2 = 0`.
//!
//! A monomial is an [`EdgeSet`]: the set of edge indices whose variable
//! appears with exponent one. Two monomials multiply to their union when they
//! are disjoint and to zero otherwise.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

const WORD: usize = 64;

/// Fixed-width bit set over the edge indices of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    width: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    /// The monomial 1 over `width` edge variables.
    pub fn empty(width: usize) -> Self {
        EdgeSet {
            width,
            words: vec![0; width.div_ceil(WORD)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut set = Self::empty(width);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width, "edge index {i} out of width {}", self.width);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Ascending edge indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            width: self.width,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }
}

/// Product of two squarefree monomials. `None` is the zero element.
pub fn nil_product(a: &EdgeSet, b: &EdgeSet) -> Option<EdgeSet> {
    a.is_disjoint(b).then(|| a.union(b))
}

/// A sum of squarefree monomials with positive integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NilLayer {
    terms: HashMap<EdgeSet, BigUint>,
}

impl NilLayer {
    pub fn new() -> Self {
        Self::default()
    }

    /// The layer `{1: 1}`.
    pub fn unit(width: usize) -> Self {
        let mut layer = Self::new();
        layer.add(EdgeSet::empty(width), BigUint::one());
        layer
    }

    pub fn add(&mut self, set: EdgeSet, multiplicity: BigUint) {
        if multiplicity == BigUint::default() {
            return;
        }
        *self.terms.entry(set).or_default() += multiplicity;
    }

    /// Adds every term of `other` into `self`.
    pub fn merge(&mut self, other: NilLayer) {
        for (set, c) in other.terms {
            self.add(set, c);
        }
    }

    /// Number of distinct monomials stored.
    pub fn distinct(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomial terms counted with multiplicity.
    pub fn term_count(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, set: &EdgeSet) -> BigUint {
        self.terms.get(set).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EdgeSet, &BigUint)> {
        self.terms.iter()
    }
}

/// Multiplies every term of `layer` by the monomial `zv`; terms sharing an
/// edge variable with `zv` vanish and colliding products merge.
pub fn layer_extend(layer: &NilLayer, zv: &EdgeSet) -> NilLayer {
    let mut out = NilLayer::new();
    for (set, c) in &layer.terms {
        if let Some(prod) = nil_product(set, zv) {
            out.add(prod, c.clone());
        }
    }
    out
}
