//! Flows modulo `k`: balance, degeneracy, supports, the flow polynomial by
//! deletion-contraction, and enumeration oracles.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::assignments::Odometer;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::multigraph::{canonical_pairs, EdgeId, EdgeSubgraph, Multigraph};
use crate::polyring::IntPoly;

/// A function `E(G) -> R_k`, read against the stored tail/head orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlowAssignment {
    modulus: u32,
    values: Vec<u32>,
}

impl FlowAssignment {
    pub fn new(modulus: u32, values: Vec<u32>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Input("flows need a modulus k >= 1".into()));
        }
        if let Some(&bad) = values.iter().find(|&&x| x >= modulus) {
            return Err(Error::Input(format!("flow value {bad} is not a residue mod {modulus}")));
        }
        Ok(FlowAssignment { modulus, values })
    }

    pub fn zero(modulus: u32, m: usize) -> Self {
        assert!(modulus > 0);
        FlowAssignment { modulus, values: vec![0; m] }
    }

    /// Reduces arbitrary integers modulo `modulus`.
    pub fn from_integers(modulus: u32, values: impl IntoIterator<Item = i64>) -> Self {
        assert!(modulus > 0);
        let k = i64::from(modulus);
        FlowAssignment {
            modulus,
            values: values.into_iter().map(|x| x.rem_euclid(k) as u32).collect(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, e: EdgeId) -> u32 {
        self.values[e]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|&x| x != 0)
    }

    /// Pointwise sum in `R_k`.
    pub fn add(&self, other: &FlowAssignment) -> FlowAssignment {
        assert_eq!(self.modulus, other.modulus);
        assert_eq!(self.values.len(), other.values.len());
        let k = u64::from(self.modulus);
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| ((u64::from(a) + u64::from(b)) % k) as u32)
            .collect();
        FlowAssignment { modulus: self.modulus, values }
    }

    /// Multiplication by a ring element `r`.
    pub fn scale(&self, r: u32) -> FlowAssignment {
        let k = u64::from(self.modulus);
        let values = self
            .values
            .iter()
            .map(|&a| (u64::from(a) * u64::from(r) % k) as u32)
            .collect();
        FlowAssignment { modulus: self.modulus, values }
    }

    /// The same flow read against edge `e` reversed.
    pub fn negate_edge(&self, e: EdgeId) -> FlowAssignment {
        let mut values = self.values.clone();
        values[e] = (self.modulus - values[e]) % self.modulus;
        FlowAssignment { modulus: self.modulus, values }
    }

    fn check_domain(&self, g: &Multigraph) -> Result<()> {
        if self.values.len() != g.m() {
            return Err(Error::Input(format!(
                "flow has {} values but the graph has {} edges",
                self.values.len(),
                g.m()
            )));
        }
        Ok(())
    }
}

/// No sources or sinks: at every vertex the outgoing and incoming sums agree
/// modulo `k`. Loops add to both sides and never unbalance a vertex.
pub fn is_balanced(g: &Multigraph, t: &FlowAssignment) -> bool {
    if t.check_domain(g).is_err() {
        return false;
    }
    let k = i64::from(t.modulus);
    let mut net = vec![0i64; g.n()];
    for (e, &x) in g.edges().iter().zip(&t.values) {
        net[e.tail] += i64::from(x);
        net[e.head] -= i64::from(x);
    }
    net.iter().all(|s| s.rem_euclid(k) == 0)
}

/// `d(t)`: the number of edges on which `t` vanishes.
pub fn degeneracy(t: &FlowAssignment) -> usize {
    t.values.iter().filter(|&&x| x == 0).count()
}

/// `G_t`: `g` with the zero-valued edges of a balanced flow removed.
pub fn support_subgraph(g: &Multigraph, t: &FlowAssignment) -> Result<EdgeSubgraph> {
    t.check_domain(g)?;
    if !is_balanced(g, t) {
        return Err(Error::Contract("support subgraph requested for an unbalanced flow".into()));
    }
    let ids: Vec<EdgeId> = (0..g.m()).filter(|&e| t.values[e] != 0).collect();
    g.edge_subgraph(&ids)
}

/// Restriction of `t` to the edges of a subgraph of the graph it lives on.
pub fn restrict(t: &FlowAssignment, sub: &EdgeSubgraph) -> FlowAssignment {
    FlowAssignment {
        modulus: t.modulus,
        values: sub.edge_ids.iter().map(|&e| t.values[e]).collect(),
    }
}

/// Visits every balanced flow on `g` modulo `k`, passing its values and its
/// degeneracy. All `k^m` assignments are scanned.
pub fn for_each_balanced_flow(
    g: &Multigraph,
    k: u32,
    limits: &Limits,
    mut visit: impl FnMut(&[u32], usize),
) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition("flows modulo 0 are undefined; need k >= 1".into()));
    }
    limits.check_work(u64::from(k), g.m(), "flow enumeration")?;
    let edges = g.edges();
    let mut net = vec![0u32; g.n()];
    let mut unbalanced = 0usize;
    let mut zeros = g.m();
    let bump = |v: usize, up: bool, net: &mut [u32], unbalanced: &mut usize| {
        let before = net[v];
        net[v] = if up { (before + 1) % k } else { (before + k - 1) % k };
        match (before == 0, net[v] == 0) {
            (true, false) => *unbalanced += 1,
            (false, true) => *unbalanced -= 1,
            _ => {}
        }
    };
    let mut odo = Odometer::new(k, g.m());
    let mut first = true;
    while let Some((values, changed)) = odo.advance() {
        if !first {
            // Digit `changed` went up by one and every later digit wrapped
            // from k-1 to 0, which is also +1 modulo k.
            for (j, e) in edges.iter().enumerate().skip(changed) {
                if !e.is_loop() {
                    bump(e.tail, true, &mut net, &mut unbalanced);
                    bump(e.head, false, &mut net, &mut unbalanced);
                }
                if j == changed {
                    if values[j] == 1 {
                        zeros -= 1;
                    }
                } else {
                    zeros += 1;
                }
            }
        }
        first = false;
        if unbalanced == 0 {
            visit(values, zeros);
        }
    }
    Ok(())
}

/// Number of balanced flows on `g` mod `k` by degeneracy: entry `d` counts
/// flows with exactly `d` zero edges.
pub fn degeneracy_histogram(g: &Multigraph, k: u32, limits: &Limits) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; g.m() + 1];
    for_each_balanced_flow(g, k, limits, |_, d| hist[d] += 1)?;
    Ok(hist)
}

/// Exhaustive count of balanced nowhere-zero flows; the oracle for
/// [`flow_polynomial`].
pub fn count_nowhere_zero_balanced_flows(g: &Multigraph, k: u32) -> Result<u64> {
    count_nowhere_zero_balanced_flows_with(g, k, &Limits::default())
}

pub fn count_nowhere_zero_balanced_flows_with(g: &Multigraph, k: u32, limits: &Limits) -> Result<u64> {
    Ok(degeneracy_histogram(g, k, limits)?[0])
}

/// `sum over balanced t of (1 - k)^d(t)`, exactly.
pub fn balanced_degeneracy_sum(g: &Multigraph, k: u32) -> Result<BigInt> {
    balanced_degeneracy_sum_with(g, k, &Limits::default())
}

pub fn balanced_degeneracy_sum_with(g: &Multigraph, k: u32, limits: &Limits) -> Result<BigInt> {
    let hist = degeneracy_histogram(g, k, limits)?;
    let base = BigInt::from(1) - BigInt::from(k);
    let mut power = BigInt::from(1);
    let mut total = BigInt::zero();
    for count in hist {
        total += &power * count;
        power *= &base;
    }
    Ok(total)
}

/// `F(G, k)` as an exact polynomial.
pub fn flow_polynomial(g: &Multigraph) -> IntPoly {
    FlowCache::new().compute(g)
}

/// Memo table for the flow recurrence, shareable across many graphs.
#[derive(Debug, Default)]
pub struct FlowCache {
    memo: HashMap<Vec<(u32, u32)>, IntPoly>,
}

impl FlowCache {
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
        let pairs = g.edges().iter().map(|e| (e.tail as u32, e.head as u32));
        self.reduce(pairs)
    }

    /// Strips loops into `(k-1)` factors and recurses on the normalized rest.
    fn reduce(&mut self, pairs: impl Iterator<Item = (u32, u32)>) -> IntPoly {
        let mut loops = 0u32;
        let rest = canonical_pairs(
            pairs.filter(|&(x, y)| {
                let is_loop = x == y;
                loops += u32::from(is_loop);
                !is_loop
            }),
            false,
        );
        let core = self.core(rest);
        if loops == 0 || core.is_zero() {
            core
        } else {
            IntPoly::k_minus_one().pow(loops) * core
        }
    }

    fn core(&mut self, pairs: Vec<(u32, u32)>) -> IntPoly {
        if pairs.is_empty() {
            return IntPoly::one();
        }
        if let Some(hit) = self.memo.get(&pairs) {
            return hit.clone();
        }
        let n = pairs.iter().map(|&(_, y)| y as usize + 1).max().unwrap_or(0);
        let g = Multigraph::new(n, pairs.iter().map(|&(x, y)| (x as usize, y as usize)))
            .expect("normalized pairs are in range");
        let result = if g.has_bridge() {
            IntPoly::zero()
        } else {
            let (a, b) = pairs[0];
            let merge = |x: u32| if x == b { a } else { x };
            let contracted = self.reduce(pairs[1..].iter().map(|&(x, y)| (merge(x), merge(y))));
            let deleted = self.reduce(pairs[1..].iter().copied());
            contracted - deleted
        };
        self.memo.insert(pairs, result.clone());
        result
    }
}
