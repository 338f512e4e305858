use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;

use crate::flats::char_poly;
use crate::graph::{bits, GraphKey, Multigraph, SimpleGraph};
use crate::poly::IntPolynomial;
use crate::sequence::{has_internal_zeros, is_sign_alternating, is_strictly_log_concave, IntSeq};
use crate::Result;

use super::cycle_matroid;

/// Leaves explored by canonical labeling before a memo key falls back to the
/// labeled encoding.
const CANONICAL_BUDGET: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticData {
    pub poly: IntPolynomial,
    /// Connected components of the graph.
    pub components: usize,
}

impl ChromaticData {
    /// Coefficients of `P(q) / q^c`, highest degree first.
    pub fn reduced_coefficients(&self) -> IntSeq {
        let mut c = self.poly.coeffs_desc();
        c.truncate(c.len().saturating_sub(self.components));
        IntSeq(c)
    }

    /// Sign-alternating, strictly log-concave in absolute value, no internal zeros.
    pub fn coefficients_ok(&self) -> bool {
        let c = self.reduced_coefficients();
        let a = c.abs();
        is_sign_alternating(&c) && is_strictly_log_concave(&a) && !has_internal_zeros(&a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChromaticMethod {
    /// Memoized deletion–contraction on the underlying simple graph.
    #[default]
    DeletionContraction,
    /// `q^c` times the characteristic polynomial of the cycle matroid.
    CycleMatroid,
    /// Deletion–contraction; the cycle matroid route enumerates every edge
    /// subset and is never the cheaper one.
    Auto,
}

/// Memo table for chromatic polynomials of simple graphs. Safe to share
/// between threads; a value computed twice is identical, so racing inserts
/// are harmless.
#[derive(Debug, Default)]
pub struct ChromaticCache {
    memo: RwLock<HashMap<GraphKey, IntPolynomial>>,
}

impl ChromaticCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &GraphKey) -> Option<IntPolynomial> {
        self.memo.read().expect("memo lock").get(key).cloned()
    }

    fn insert(&self, key: GraphKey, p: IntPolynomial) {
        self.memo.write().expect("memo lock").entry(key).or_insert(p);
    }
}

pub fn chromatic_polynomial(g: &Multigraph) -> Result<ChromaticData> {
    chromatic_polynomial_with(g, &ChromaticCache::new(), ChromaticMethod::Auto)
}

pub fn chromatic_polynomial_with(
    g: &Multigraph,
    cache: &ChromaticCache,
    method: ChromaticMethod,
) -> Result<ChromaticData> {
    let components = g.components();
    let poly = match method {
        ChromaticMethod::CycleMatroid => {
            char_poly(&cycle_matroid(g)?)?.shift_up(components)
        }
        ChromaticMethod::DeletionContraction | ChromaticMethod::Auto => match g.to_simple() {
            None => IntPolynomial::zero(),
            Some(s) => chromatic_simple(&s, cache),
        },
    };
    Ok(ChromaticData { poly, components })
}

/// `q (q-1) ... (q-n+1)`
fn falling_factorial(n: usize) -> IntPolynomial {
    (0..n).fold(IntPolynomial::one(), |acc, i| &acc * &IntPolynomial::linear(-(i as i64)))
}

fn chromatic_simple(g: &SimpleGraph, cache: &ChromaticCache) -> IntPolynomial {
    let n = g.n();
    let m = g.edge_count();
    if n == 0 {
        return IntPolynomial::one();
    }
    if m == 0 {
        return IntPolynomial::monomial(BigInt::from(1), n);
    }
    let comps = g.component_masks();
    if comps.len() > 1 {
        return comps
            .iter()
            .map(|&c| chromatic_simple(&g.induced(c), cache))
            .fold(IntPolynomial::one(), |acc, p| &acc * &p);
    }
    if g.is_complete() {
        return falling_factorial(n);
    }
    let q_minus_1 = IntPolynomial::linear(-1);
    if m == n - 1 {
        return &IntPolynomial::q() * &q_minus_1.pow(n - 1);
    }
    if (0..n).all(|v| g.degree(v) == 2) {
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        return &q_minus_1.pow(n) + &q_minus_1.scale(&BigInt::from(sign));
    }
    if let Some(leaf) = (0..n).find(|&v| g.degree(v) == 1) {
        return &q_minus_1 * &chromatic_simple(&g.remove_vertex(leaf), cache);
    }

    let key = g.memo_key(CANONICAL_BUDGET);
    if let Some(p) = cache.get(&key) {
        return p;
    }
    let result = if 4 * m > n * (n - 1) {
        // dense: add a missing edge, P(G) = P(G + uw) + P(G / uw)
        let (u, w) = missing_edge(g);
        let mut plus = g.clone();
        plus.add_edge(u, w);
        &chromatic_simple(&plus, cache) + &chromatic_simple(&g.merge_vertices(u, w), cache)
    } else {
        // sparse: P(G) = P(G - uw) - P(G / uw), at a vertex of least degree
        let u = (0..n).min_by_key(|&v| g.degree(v)).expect("n > 0");
        let w = bits(g.neighbors(u)).next().expect("connected, n > 1");
        let mut minus = g.clone();
        minus.remove_edge(u, w);
        &chromatic_simple(&minus, cache) - &chromatic_simple(&g.merge_vertices(u, w), cache)
    };
    cache.insert(key, result.clone());
    result
}

fn missing_edge(g: &SimpleGraph) -> (usize, usize) {
    let n = g.n();
    // endpoint of largest degree keeps the merge small
    let u = (0..n)
        .filter(|&v| g.degree(v) < n - 1)
        .max_by_key(|&v| g.degree(v))
        .expect("graph is not complete");
    let w = (0..n)
        .filter(|&x| x != u && !g.has_edge(u, x))
        .max_by_key(|&x| g.degree(x))
        .expect("u has a non-neighbor");
    (u, w)
}
