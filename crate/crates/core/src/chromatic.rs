//! Chromatic polynomials by deletion-contraction, and the brute-force
//! proper-coloring count used as their oracle.

use std::collections::HashMap;

use crate::assignments::Odometer;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::multigraph::{canonical_pairs, Multigraph, VertexId};
use crate::polyring::IntPoly;

/// A vertex coloring with values in `R_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    modulus: u32,
    values: Vec<u32>,
}

impl Coloring {
    pub fn new(modulus: u32, values: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&c| c >= modulus) {
            return Err(Error::Input(format!("color {bad} is not a residue mod {modulus}")));
        }
        Ok(Coloring { modulus, values })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, v: VertexId) -> u32 {
        self.values[v]
    }

    /// Proper: the two ends of every edge get different colors.
    pub fn is_proper(&self, g: &Multigraph) -> bool {
        g.edges().iter().all(|e| self.values[e.tail] != self.values[e.head])
    }
}

/// `C(G, k)` as an exact polynomial.
pub fn chromatic_polynomial(g: &Multigraph) -> IntPoly {
    ChromaticCache::new().compute(g)
}

/// Number of proper colorings of `g` with colors `0..k`, by exhaustive search
/// over all `k^n` colorings.
pub fn count_proper_colorings(g: &Multigraph, k: u32) -> Result<u64> {
    count_proper_colorings_with(g, k, &Limits::default())
}

pub fn count_proper_colorings_with(g: &Multigraph, k: u32, limits: &Limits) -> Result<u64> {
    limits.check_work(u64::from(k), g.n(), "proper-coloring enumeration")?;
    let edges = g.edges();
    let mut odo = Odometer::new(k, g.n());
    let mut count = 0;
    while let Some((colors, _)) = odo.advance() {
        if edges.iter().all(|e| colors[e.tail] != colors[e.head]) {
            count += 1;
        }
    }
    Ok(count)
}

type Pairs = Vec<(u32, u32)>;

/// Memo table for deletion-contraction. Reuse one cache across related
/// graphs (e.g. all duals in a subgraph sum) to share subproblems.
#[derive(Debug, Default)]
pub struct ChromaticCache {
    memo: HashMap<Pairs, IntPoly>,
}

impl ChromaticCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn compute(&mut self, g: &Multigraph) -> IntPoly {
        if g.has_loop() {
            return IntPoly::zero();
        }
        let pairs = g.edges().iter().map(|e| (e.tail as u32, e.head as u32));
        let core = normalize(pairs);
        let used = vertex_count(&core);
        self.core(core).shift(g.n() - used)
    }

    /// Chromatic polynomial of a loop-free simple graph with no isolated
    /// vertices, given in normalized form.
    fn core(&mut self, pairs: Pairs) -> IntPoly {
        if pairs.is_empty() {
            return IntPoly::one();
        }
        if let Some(hit) = self.memo.get(&pairs) {
            return hit.clone();
        }
        let n = vertex_count(&pairs);
        // Pivot on the first (lowest-index) edge of the normalized list.
        let (a, b) = pairs[0];

        let deleted = normalize(pairs[1..].iter().copied());
        let deleted_poly = self.core(deleted.clone()).shift(n - vertex_count(&deleted));

        let merge = |x: u32| if x == b { a } else { x };
        let contracted_raw = pairs[1..].iter().map(|&(x, y)| (merge(x), merge(y)));
        let contracted = normalize(contracted_raw);
        let contracted_poly = self.core(contracted.clone()).shift(n - 1 - vertex_count(&contracted));

        let result = deleted_poly - contracted_poly;
        self.memo.insert(pairs, result.clone());
        result
    }
}

fn vertex_count(pairs: &[(u32, u32)]) -> usize {
    pairs.iter().map(|&(_, y)| y as usize + 1).max().unwrap_or(0)
}

fn normalize(pairs: impl Iterator<Item = (u32, u32)>) -> Pairs {
    canonical_pairs(pairs, true)
}
