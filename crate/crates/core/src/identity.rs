//! The subgraph-sum representation of the chromatic polynomial.
//!
//! The sum runs over all edge subgraphs `H <= G`. Denominators are cleared
//! throughout: the identity is checked as
//! `k^m C(G) = k^n * sum_H (-1)^m(H) (k-1)^(m-m(H)) F(H)`,
//! which is an equality of integer polynomials.

use num_bigint::BigInt;
use num_traits::One;

use crate::chromatic::{chromatic_polynomial, count_proper_colorings_with};
use crate::error::Result;
use crate::flows::{balanced_degeneracy_sum_with, FlowCache};
use crate::limits::Limits;
use crate::multigraph::Multigraph;
use crate::polyring::IntPoly;
use crate::verdict::{Identity, Verdict};

/// `w(H, k) = k^k_shift * f`, where `f = F(H, k)` and `k_shift = n(H) - m(H)`.
///
/// The shift can be negative, so this is kept as a pair instead of a
/// Laurent polynomial; only products, division by `k` and comparison are
/// ever needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WFunctionValue {
    pub f: IntPoly,
    pub k_shift: i64,
}

impl WFunctionValue {
    pub fn mul(&self, other: &WFunctionValue) -> WFunctionValue {
        WFunctionValue { f: &self.f * &other.f, k_shift: self.k_shift + other.k_shift }
    }

    pub fn div_k(&self) -> WFunctionValue {
        WFunctionValue { f: self.f.clone(), k_shift: self.k_shift - 1 }
    }

    /// Equality as functions of `k`: zero values are equal regardless of shift.
    pub fn same_function(&self, other: &WFunctionValue) -> bool {
        if self.f.is_zero() || other.f.is_zero() {
            return self.f.is_zero() && other.f.is_zero();
        }
        self == other
    }

    /// `k^(m - n) * w` for a graph with `n` vertices and `m` edges, when that
    /// is a polynomial.
    pub fn times_k_pow(&self, exp: i64) -> Option<IntPoly> {
        let total = self.k_shift + exp;
        if self.f.is_zero() {
            return Some(IntPoly::zero());
        }
        usize::try_from(total).ok().map(|s| self.f.shift(s))
    }
}

pub fn w_function(h: &Multigraph) -> WFunctionValue {
    WFunctionValue { f: crate::flows::flow_polynomial(h), k_shift: h.n() as i64 - h.m() as i64 }
}

/// `sum over H <= G of (-1)^m(H) (k-1)^(m(G)-m(H)) F(H, k)`.
pub fn subgraph_sum(g: &Multigraph) -> Result<IntPoly> {
    subgraph_sum_with(g, &Limits::default(), &mut FlowCache::new())
}

pub fn subgraph_sum_with(g: &Multigraph, limits: &Limits, cache: &mut FlowCache) -> Result<IntPoly> {
    let m = g.m();
    let powers = k_minus_one_powers(m);
    let mut total = IntPoly::zero();
    for h in g.edge_subgraphs(limits)? {
        let f = cache.compute(&h.graph);
        if f.is_zero() {
            continue;
        }
        let mh = h.graph.m();
        let term = &powers[m - mh] * &f;
        if mh % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    Ok(total)
}

/// `(k-1)^i` for `i = 0..=m`.
pub(crate) fn k_minus_one_powers(m: usize) -> Vec<IntPoly> {
    let mut powers = Vec::with_capacity(m + 1);
    powers.push(IntPoly::one());
    for i in 0..m {
        let next = &powers[i] * &IntPoly::k_minus_one();
        powers.push(next);
    }
    powers
}

/// Checks `k^m C(G) = k^n * subgraph_sum(G)` as polynomials.
pub fn verify_theorem(g: &Multigraph) -> Result<Verdict> {
    verify_theorem_with(g, &Limits::default(), &mut FlowCache::new())
}

pub fn verify_theorem_with(g: &Multigraph, limits: &Limits, cache: &mut FlowCache) -> Result<Verdict> {
    let sum = subgraph_sum_with(g, limits, cache)?;
    let lhs = chromatic_polynomial(g).shift(g.m());
    let rhs = sum.shift(g.n());
    Ok(Verdict::compare(Identity::SubgraphSum, lhs, rhs))
}

/// Checks `k^m C(G,k) = (-1)^m k^n sum_{balanced t} (1-k)^d(t)` as integers,
/// with `C(G,k)` counted by brute force.
pub fn verify_eq10(g: &Multigraph, k: u32) -> Result<Verdict> {
    verify_eq10_with(g, k, &Limits::default())
}

pub fn verify_eq10_with(g: &Multigraph, k: u32, limits: &Limits) -> Result<Verdict> {
    let sum = balanced_degeneracy_sum_with(g, k, limits)?;
    let colorings = count_proper_colorings_with(g, k, limits)?;
    let kb = BigInt::from(k);
    let lhs = pow(&kb, g.m()) * colorings;
    let sign = if g.m() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let rhs = sign * pow(&kb, g.n()) * sum;
    Ok(Verdict::compare(Identity::DegeneracySum, lhs, rhs).with_note(format!("k={k}")))
}

fn pow(base: &BigInt, exp: usize) -> BigInt {
    (0..exp).fold(BigInt::one(), |acc, _| acc * base)
}
