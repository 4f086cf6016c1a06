//! Oriented multigraphs with loops and parallel edges.
//!
//! Every operation returns a fresh graph; values are never mutated in place.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Dense vertex index `0..n`.
pub type VertexId = usize;
/// Dense edge index `0..m`, in input order.
pub type EdgeId = usize;

/// An oriented edge. Loops have `tail == head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Edge { tail, head }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// The endpoint opposite to `v`. `v` must be an endpoint.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }

    fn joins(&self, u: VertexId, v: VertexId) -> bool {
        (self.tail == u && self.head == v) || (self.tail == v && self.head == u)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let edges: Vec<Edge> = edges.into_iter().map(|(t, h)| Edge::new(t, h)).collect();
        for e in &edges {
            for v in [e.tail, e.head] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, vertices: n });
                }
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub(crate) fn from_parts(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.iter().all(|e| e.tail < n && e.head < n));
        Multigraph { n, edges }
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<Edge> {
        self.edges
            .get(e)
            .copied()
            .ok_or(Error::EdgeOutOfRange { edge: e, edges: self.m() })
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.tail == v) + usize::from(e.head == v))
            .sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.tail] += 1;
            deg[e.head] += 1;
        }
        deg
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertices: self.n })
        }
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Multigraph> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Multigraph { n: self.n, edges })
    }

    /// Minor-style contraction of a single edge: the endpoints are merged
    /// into the lower-numbered one and `e` is removed. Edges parallel to `e`
    /// become loops. Contracting a loop deletes it.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Multigraph> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return self.delete_edge(e);
        }
        let (lo, hi) = (edge.tail.min(edge.head), edge.tail.max(edge.head));
        let relabel = |x: VertexId| match x.cmp(&hi) {
            std::cmp::Ordering::Equal => lo,
            std::cmp::Ordering::Greater => x - 1,
            std::cmp::Ordering::Less => x,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, f)| Edge::new(relabel(f.tail), relabel(f.head)))
            .collect();
        Ok(Multigraph { n: self.n - 1, edges })
    }

    /// Contracts every edge in `set` minor-style (in any order; the result
    /// does not depend on it). Surviving edges keep their relative order and
    /// merged vertex classes are numbered by their smallest member.
    pub fn contract_edges(&self, set: &[EdgeId]) -> Result<Multigraph> {
        let mut drop = vec![false; self.m()];
        let mut parent: Vec<VertexId> = (0..self.n).collect();
        fn find(parent: &mut [VertexId], mut x: VertexId) -> VertexId {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &e in set {
            let edge = self.edge(e)?;
            drop[e] = true;
            let (a, b) = (find(&mut parent, edge.tail), find(&mut parent, edge.head));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[v] = label[r];
        }
        let edges = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(e, _)| Edge::new(label[e.tail], label[e.head]))
            .collect();
        Ok(Multigraph { n: next, edges })
    }

    /// Contraction in the sense of removing *all* edges joining `u` and `v`
    /// and identifying the two vertices. The merged vertex takes the lower
    /// index; higher indices shift down by one.
    pub fn contract_pair(&self, u: VertexId, v: VertexId) -> Result<Multigraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Input(format!("cannot contract vertex {u} with itself")));
        }
        if !self.edges.iter().any(|e| e.joins(u, v)) {
            return Err(Error::Input(format!("vertices {u} and {v} are not adjacent")));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let relabel = |x: VertexId| match x.cmp(&hi) {
            std::cmp::Ordering::Equal => lo,
            std::cmp::Ordering::Greater => x - 1,
            std::cmp::Ordering::Less => x,
        };
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.joins(u, v))
            .map(|e| Edge::new(relabel(e.tail), relabel(e.head)))
            .collect();
        Ok(Multigraph { n: self.n - 1, edges })
    }

    /// Replaces edge `e` by a two-edge path through a new vertex `n`. The
    /// first half keeps id `e`, the second half is appended as edge `m`;
    /// orientation runs tail -> new -> head.
    pub fn subdivide_edge(&self, e: EdgeId) -> Result<Multigraph> {
        let edge = self.edge(e)?;
        let mid = self.n;
        let mut edges = self.edges.clone();
        edges[e] = Edge::new(edge.tail, mid);
        edges.push(Edge::new(mid, edge.head));
        Ok(Multigraph { n: self.n + 1, edges })
    }

    /// Same graph with edge `e` pointing the other way.
    pub fn reverse_edge(&self, e: EdgeId) -> Result<Multigraph> {
        let edge = self.edge(e)?;
        let mut edges = self.edges.clone();
        edges[e] = Edge::new(edge.head, edge.tail);
        Ok(Multigraph { n: self.n, edges })
    }

    /// Vertices of `other` follow those of `self`; edge ids of `other` are
    /// shifted by `self.m()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge::new(e.tail + shift, e.head + shift)))
            .collect();
        Multigraph { n: self.n + other.n, edges }
    }

    /// Glues `other` onto `self` by identifying `v2` of `other` with `v1` of `self`.
    pub fn one_point_join(&self, other: &Multigraph, v1: VertexId, v2: VertexId) -> Result<Multigraph> {
        self.check_vertex(v1)?;
        other.check_vertex(v2)?;
        let n1 = self.n;
        let relabel = |x: VertexId| match x.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => n1 + x,
            std::cmp::Ordering::Greater => n1 + x - 1,
        };
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge::new(relabel(e.tail), relabel(e.head))))
            .collect();
        Ok(Multigraph { n: n1 + other.n - 1, edges })
    }

    /// Connected components; isolated vertices are components of their own.
    /// Labels are numbered in order of each component's smallest vertex.
    pub fn components(&self) -> Components {
        let adj = self.adjacency();
        let mut labels = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if labels[start] != usize::MAX {
                continue;
            }
            labels[start] = count;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &(w, _) in &adj[v] {
                    if labels[w] == usize::MAX {
                        labels[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        Components { count, labels }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count <= 1
    }

    /// Edges whose removal increases the number of components, ascending.
    /// Loops and edges with a parallel twin are never bridges.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut out = Vec::new();
        let mut timer = 0;
        // Iterative DFS; frames hold (vertex, edge used to enter, next adjacency slot).
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, None, 0));
            while let Some(frame) = stack.last_mut() {
                let (v, via, slot) = *frame;
                if slot < adj[v].len() {
                    frame.2 += 1;
                    let (w, e) = adj[v][slot];
                    if Some(e) == via || w == v {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(parent, _, _))) = (via, stack.last()) {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push(e);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn has_bridge(&self) -> bool {
        !self.bridges().is_empty()
    }

    /// Per-vertex list of `(neighbour, edge)`; a loop appears twice at its vertex.
    pub fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.tail].push((e.head, i));
            adj[e.head].push((e.tail, i));
        }
        adj
    }

    /// The edge subgraph spanned by `edge_ids` (ascending, distinct).
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> Result<EdgeSubgraph> {
        let mut used = vec![false; self.n];
        for &e in edge_ids {
            let edge = self.edge(e)?;
            used[edge.tail] = true;
            used[edge.head] = true;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut vertex_ids = Vec::new();
        for v in (0..self.n).filter(|&v| used[v]) {
            map[v] = vertex_ids.len();
            vertex_ids.push(v);
        }
        let edges = edge_ids
            .iter()
            .map(|&e| {
                let edge = self.edges[e];
                Edge::new(map[edge.tail], map[edge.head])
            })
            .collect();
        Ok(EdgeSubgraph {
            edge_ids: edge_ids.to_vec(),
            vertex_ids,
            graph: Multigraph { n: map.iter().filter(|&&x| x != usize::MAX).count(), edges },
        })
    }

    /// All `2^m` edge subgraphs, in increasing bitmask order (bit `i` = edge `i`).
    pub fn edge_subgraphs(&self, limits: &Limits) -> Result<EdgeSubgraphs<'_>> {
        limits.check_edges(self.m())?;
        Ok(EdgeSubgraphs { parent: self, next: 0, end: 1u64 << self.m() })
    }

    /// Deterministic structural encoding used as a memoization key: vertices
    /// relabelled by first occurrence along the edge list, undirected pairs
    /// sorted. Isolated vertices are counted separately.
    pub fn structural_key(&self) -> StructuralKey {
        let mut label = vec![u32::MAX; self.n];
        let mut next = 0u32;
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(self.m());
        for e in &self.edges {
            for v in [e.tail.min(e.head), e.tail.max(e.head)] {
                if label[v] == u32::MAX {
                    label[v] = next;
                    next += 1;
                }
            }
            let (a, b) = (label[e.tail], label[e.head]);
            pairs.push((a.min(b), a.max(b)));
        }
        pairs.sort_unstable();
        StructuralKey { isolated: self.n - next as usize, pairs }
    }
}

/// Relabels vertices by first occurrence, orients each pair low-to-high and
/// sorts; with `dedup` also collapses parallel pairs. A second relabelling
/// pass after sorting makes the result depend less on the input edge order.
pub(crate) fn canonical_pairs(pairs: impl Iterator<Item = (u32, u32)>, dedup: bool) -> Vec<(u32, u32)> {
    fn relabel(pairs: impl Iterator<Item = (u32, u32)>) -> Vec<(u32, u32)> {
        let mut label: HashMap<u32, u32> = HashMap::new();
        let mut out: Vec<(u32, u32)> = pairs
            .map(|(x, y)| {
                let (x, y) = (x.min(y), x.max(y));
                let next = label.len() as u32;
                let lx = *label.entry(x).or_insert(next);
                let next = label.len() as u32;
                let ly = *label.entry(y).or_insert(next);
                (lx.min(ly), lx.max(ly))
            })
            .collect();
        out.sort_unstable();
        out
    }
    let mut first = relabel(pairs);
    if dedup {
        first.dedup();
    }
    relabel(first.into_iter())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructuralKey {
    pub isolated: usize,
    pub pairs: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub labels: Vec<usize>,
}

/// `H <= G`: the edges `edge_ids` of a parent graph together with exactly
/// their endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSubgraph {
    /// Parent edge ids, ascending. Edge `i` of `graph` is `edge_ids[i]`.
    pub edge_ids: Vec<EdgeId>,
    /// Parent vertex ids, ascending. Vertex `i` of `graph` is `vertex_ids[i]`.
    pub vertex_ids: Vec<VertexId>,
    pub graph: Multigraph,
}

pub struct EdgeSubgraphs<'a> {
    parent: &'a Multigraph,
    next: u64,
    end: u64,
}

impl Iterator for EdgeSubgraphs<'_> {
    type Item = EdgeSubgraph;

    fn next(&mut self) -> Option<EdgeSubgraph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let ids: Vec<EdgeId> = (0..self.parent.m()).filter(|i| mask >> i & 1 == 1).collect();
        Some(self.parent.edge_subgraph(&ids).expect("ids in range"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for EdgeSubgraphs<'_> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn k2() -> Multigraph {
        Multigraph::new(2, [(0, 1)]).unwrap()
    }

    fn loop1() -> Multigraph {
        Multigraph::new(1, [(0, 0)]).unwrap()
    }

    #[test]
    fn rejects_bad_endpoints() {
        assert!(matches!(Multigraph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn delete() {
        let g = k2().delete_edge(0).unwrap();
        assert_eq!((g.n(), g.m()), (2, 0));
        let p = cycle(3).delete_edge(1).unwrap();
        assert_eq!((p.n(), p.m()), (3, 2));
        assert!(p.bridges().len() == 2);
        let g = loop1().delete_edge(0).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert!(matches!(k2().delete_edge(1), Err(Error::EdgeOutOfRange { edge: 1, edges: 1 })));
    }

    #[test]
    fn contract() {
        let g = k2().contract_edge(0).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        let dipole = Multigraph::new(2, [(0, 1), (1, 0)]).unwrap();
        let g = dipole.contract_edge(0).unwrap();
        assert_eq!(g, Multigraph::new(1, [(0, 0)]).unwrap());
        let g = cycle(3).contract_edge(0).unwrap();
        assert_eq!((g.n(), g.m()), (2, 2));
        assert!(!g.has_loop());
        assert_eq!(loop1().contract_edge(0).unwrap(), Multigraph::edgeless(1));
        assert!(k2().contract_edge(3).is_err());
    }

    #[test]
    fn contract_many_matches_sequential() {
        let g = complete(4);
        // contract edges 0 and 5 one at a time, tracking ids by hand
        let once = g.contract_edges(&[0]).unwrap();
        assert_eq!(once, g.contract_edge(0).unwrap());
        let both = g.contract_edges(&[0, 5]).unwrap();
        assert_eq!((both.n(), both.m()), (2, 4));
        // a triangle fully contracted: third edge becomes a loop, then deleted
        let tri = cycle(3).contract_edges(&[0, 1, 2]).unwrap();
        assert_eq!(tri, Multigraph::edgeless(1));
    }

    #[test]
    fn contract_pair_examples() {
        let dipole = Multigraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(dipole.contract_pair(0, 1).unwrap(), Multigraph::edgeless(1));
        let g = cycle(3).contract_pair(0, 1).unwrap();
        assert_eq!((g.n(), g.m()), (2, 2));
        let g = path(3).contract_pair(0, 1).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(cycle(3).contract_pair(1, 1).is_err());
        assert!(path(3).contract_pair(0, 2).is_err());
    }

    #[test]
    fn contract_pair_adds_path_lengths() {
        // v' -- w at distance 1 and v'' -- w at distance 2; after merging,
        // the merged vertex reaches w through both routes.
        let g = Multigraph::new(4, [(0, 1), (0, 2), (1, 3), (3, 2)]).unwrap();
        let h = g.contract_pair(0, 1).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        assert!(!h.has_loop());
    }

    #[test]
    fn subgraph_enumeration() {
        let limits = Limits::default();
        let subs: Vec<_> = k2().edge_subgraphs(&limits).unwrap().collect();
        assert_eq!(subs.len(), 2);
        assert_eq!(subs[0].graph, Multigraph::edgeless(0));
        assert_eq!(subs[1].graph, k2());
        assert_eq!(cycle(3).edge_subgraphs(&limits).unwrap().count(), 8);
        assert_eq!(Multigraph::edgeless(0).edge_subgraphs(&limits).unwrap().count(), 1);
        assert_eq!(Multigraph::edgeless(3).edge_subgraphs(&limits).unwrap().count(), 1);
    }

    #[test]
    fn subgraph_vertices_are_endpoints() {
        let g = Multigraph::new(5, [(0, 1), (1, 1), (2, 3), (3, 0)]).unwrap();
        for h in g.edge_subgraphs(&Limits::default()).unwrap() {
            let deg = h.graph.degree_sequence();
            assert!(deg.iter().all(|&d| d > 0));
            assert_eq!(h.graph.m(), h.edge_ids.len());
            for (i, &pe) in h.edge_ids.iter().enumerate() {
                let e = h.graph.edges()[i];
                let p = g.edges()[pe];
                assert_eq!((h.vertex_ids[e.tail], h.vertex_ids[e.head]), (p.tail, p.head));
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let limits = Limits { edge_cap: 2, ..Limits::default() };
        match cycle(3).edge_subgraphs(&limits) {
            Err(Error::Resource { cap, .. }) => assert_eq!(cap, 2),
            _ => panic!("expected resource error"),
        }
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(path(4).bridges(), vec![0, 1, 2]);
        assert!(cycle(3).bridges().is_empty());
        assert!(loop1().bridges().is_empty());
        let dipole = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert!(dipole.bridges().is_empty());
        // two triangles joined by an edge
        let g = Multigraph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(g.bridges(), vec![3]);
    }

    #[test]
    fn component_examples() {
        assert_eq!(cycle(3).components().count, 1);
        let two = Multigraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), Components { count: 2, labels: vec![0, 0, 1, 1] });
        assert_eq!(Multigraph::edgeless(3).components().count, 3);
    }

    #[test]
    fn subdivision() {
        let g = k2().subdivide_edge(0).unwrap();
        assert_eq!(g, Multigraph::new(3, [(0, 2), (2, 1)]).unwrap());
        assert_eq!(g.structural_key(), path(3).structural_key());
        let g = loop1().subdivide_edge(0).unwrap();
        assert_eq!(g, Multigraph::new(2, [(0, 1), (1, 0)]).unwrap());
        let g = cycle(3).subdivide_edge(0).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert_eq!(g.degree_sequence(), vec![2; 4]);
        assert!(g.is_connected());
    }

    #[test]
    fn unions_and_joins() {
        let u = cycle(3).disjoint_union(&cycle(3));
        assert_eq!((u.n(), u.m(), u.components().count), (6, 6, 2));
        let j = cycle(3).one_point_join(&cycle(3), 0, 0).unwrap();
        assert_eq!((j.n(), j.m(), j.components().count), (5, 6, 1));
        assert_eq!(j.degree(0), 4);
        assert_eq!(k2().disjoint_union(&Multigraph::edgeless(0)), k2());
        assert!(cycle(3).one_point_join(&cycle(3), 0, 3).is_err());
    }

    #[test]
    fn structural_key_ignores_edge_order_and_orientation() {
        let a = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let b = Multigraph::new(3, [(1, 0), (2, 1)]).unwrap();
        assert_eq!(a.structural_key(), b.structural_key());
        let c = Multigraph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert_ne!(a.structural_key(), c.structural_key());
    }
}
