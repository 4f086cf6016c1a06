//! Standard graph families and seeded random multigraphs.

use rand::Rng;

use crate::multigraph::{Edge, Multigraph};

/// Path on `n` vertices, edges `i -> i+1`.
pub fn path(n: usize) -> Multigraph {
    Multigraph::from_parts(n, (1..n).map(|i| Edge::new(i - 1, i)).collect())
}

/// Cycle on `n >= 1` vertices oriented consistently. `cycle(1)` is a loop,
/// `cycle(2)` a pair of parallel edges.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 1, "cycle needs at least one vertex");
    Multigraph::from_parts(n, (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect())
}

/// `K_n`, edges in lexicographic order `(i, j)` with `i < j`.
pub fn complete(n: usize) -> Multigraph {
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| Edge::new(i, j)))
        .collect();
    Multigraph::from_parts(n, edges)
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Multigraph {
    Multigraph::from_parts(leaves + 1, (1..=leaves).map(|i| Edge::new(0, i)).collect())
}

/// Two vertices joined by `m` parallel edges.
pub fn dipole(m: usize) -> Multigraph {
    Multigraph::from_parts(2, vec![Edge::new(0, 1); m])
}

/// Tree given by a parent array: vertex `i + 1` hangs off `parents[i] <= i`.
pub fn tree_from_parents(parents: &[usize]) -> Multigraph {
    let edges = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            assert!(p <= i, "parent must precede child");
            Edge::new(p, i + 1)
        })
        .collect();
    Multigraph::from_parts(parents.len() + 1, edges)
}

/// Every parent array for trees on `n` vertices (`(n-1)!` recursive trees).
/// Covers every unlabeled tree shape on `n` vertices.
pub fn all_recursive_trees(n: usize) -> Vec<Multigraph> {
    fn rec(parents: &mut Vec<usize>, n: usize, out: &mut Vec<Multigraph>) {
        if parents.len() + 1 == n {
            out.push(tree_from_parents(parents));
            return;
        }
        for p in 0..=parents.len() {
            parents.push(p);
            rec(parents, n, out);
            parents.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(&mut Vec::new(), n, &mut out);
    }
    out
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Multigraph {
    let parents: Vec<usize> = (0..n.saturating_sub(1)).map(|i| rng.random_range(0..=i)).collect();
    tree_from_parents(&parents)
}

/// Wheel: rim cycle on `1..=rim` plus hub `0` joined to every rim vertex.
pub fn wheel(rim: usize) -> Multigraph {
    let mut edges: Vec<Edge> = (1..=rim).map(|i| Edge::new(i, i % rim + 1)).collect();
    edges.extend((1..=rim).map(|i| Edge::new(0, i)));
    Multigraph::from_parts(rim + 1, edges)
}

/// Uniform random multigraph: `n` vertices, `m` edges with independent
/// uniform endpoints, so loops and parallel edges occur naturally.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Multigraph {
    assert!(n > 0 || m == 0);
    let edges = (0..m)
        .map(|_| Edge::new(rng.random_range(0..n), rng.random_range(0..n)))
        .collect();
    Multigraph::from_parts(n, edges)
}

/// All labelled simple graphs on `n` vertices (`2^(n(n-1)/2)` of them).
pub fn all_simple_graphs(n: usize) -> impl Iterator<Item = Multigraph> {
    let pairs: Vec<Edge> = complete(n).edges().to_vec();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        Multigraph::from_parts(n, edges)
    })
}

/// One representative per isomorphism class of simple graphs on `n <= 6`
/// vertices, found by minimizing the adjacency bitmask over all vertex
/// permutations.
pub fn simple_graphs_up_to_isomorphism(n: usize) -> Vec<Multigraph> {
    assert!(n <= 6, "brute-force canonical forms are only practical for tiny n");
    let pairs: Vec<(usize, usize)> = complete(n).edges().iter().map(|e| (e.tail, e.head)).collect();
    let index = |a: usize, b: usize| -> usize {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).expect("pair")
    };
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0..(1u64 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|perm| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &(a, b))| acc | 1 << index(perm[a], perm[b]))
            })
            .min()
            .unwrap_or(0);
        seen.insert(canon);
    }
    seen.into_iter()
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(a, b))| Edge::new(a, b))
                .collect();
            Multigraph::from_parts(n, edges)
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
