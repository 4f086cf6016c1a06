//! Plane graphs given by rotation systems, face tracing, geometric duals, and
//! the identities that relate a plane graph to its dual.
//!
//! Rotations list the darts around each vertex counterclockwise. Faces are
//! traced by one fixed rule: after walking dart `d` to the other end of its
//! edge, continue with the rotation successor of the opposite dart there.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::assignments::Odometer;
use crate::chromatic::{chromatic_polynomial, ChromaticCache, Coloring};
use crate::error::{Error, Result};
use crate::flows::{flow_polynomial, for_each_balanced_flow, is_balanced, FlowAssignment, FlowCache};
use crate::identity::k_minus_one_powers;
use crate::limits::Limits;
use crate::multigraph::{Edge, EdgeId, EdgeSubgraph, Multigraph, VertexId};
use crate::polyring::IntPoly;
use crate::verdict::{Identity, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

/// One end of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: EdgeId,
    pub end: End,
}

impl Dart {
    pub fn tail(edge: EdgeId) -> Self {
        Dart { edge, end: End::Tail }
    }

    pub fn head(edge: EdgeId) -> Self {
        Dart { edge, end: End::Head }
    }

    pub fn opposite(self) -> Self {
        let end = match self.end {
            End::Tail => End::Head,
            End::Head => End::Tail,
        };
        Dart { edge: self.edge, end }
    }

    /// Dense index `2e` for the tail dart, `2e + 1` for the head dart.
    pub fn index(self) -> usize {
        2 * self.edge + usize::from(self.end == End::Head)
    }

    pub fn vertex(self, g: &Multigraph) -> VertexId {
        let e = g.edges()[self.edge];
        match self.end {
            End::Tail => e.tail,
            End::Head => e.head,
        }
    }

    /// `+1` when walking away from this dart follows the edge's orientation.
    pub fn sign(self) -> i64 {
        match self.end {
            End::Tail => 1,
            End::Head => -1,
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.end {
            End::Tail => write!(f, "+{}", self.edge),
            End::Head => write!(f, "-{}", self.edge),
        }
    }
}

/// A face as the closed walk around it. Walking from each dart's vertex
/// along its edge traverses the boundary once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// Traces all faces of a rotation system. Faces are discovered by scanning
/// darts in index order, so the result is deterministic. A single vertex
/// without edges has one face with an empty boundary.
pub fn trace_faces(g: &Multigraph, rotation: &[Vec<Dart>]) -> Result<Vec<Face>> {
    let position = dart_positions(g, rotation)?;
    if g.m() == 0 {
        return Ok(if g.n() == 1 { vec![Face { darts: Vec::new() }] } else { Vec::new() });
    }
    let mut seen = vec![false; 2 * g.m()];
    let mut faces = Vec::new();
    for start in 0..2 * g.m() {
        if seen[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = dart_from_index(start);
        while !seen[d.index()] {
            seen[d.index()] = true;
            darts.push(d);
            let arrive = d.opposite();
            let (v, i) = position[arrive.index()];
            d = rotation[v][(i + 1) % rotation[v].len()];
        }
        faces.push(Face { darts });
    }
    Ok(faces)
}

fn dart_from_index(i: usize) -> Dart {
    Dart { edge: i / 2, end: if i % 2 == 0 { End::Tail } else { End::Head } }
}

/// Checks that every dart occurs exactly once, at its own vertex, and
/// returns `(vertex, slot)` for each dart index.
fn dart_positions(g: &Multigraph, rotation: &[Vec<Dart>]) -> Result<Vec<(VertexId, usize)>> {
    if rotation.len() != g.n() {
        return Err(Error::Embedding(format!(
            "rotation system lists {} vertices, graph has {}",
            rotation.len(),
            g.n()
        )));
    }
    let mut position = vec![(usize::MAX, 0); 2 * g.m()];
    for (v, darts) in rotation.iter().enumerate() {
        for (i, &d) in darts.iter().enumerate() {
            if d.edge >= g.m() {
                return Err(Error::Embedding(format!("dart {d} at vertex {v} names a missing edge")));
            }
            if d.vertex(g) != v {
                return Err(Error::Embedding(format!("dart {d} listed at vertex {v}, which is not its endpoint")));
            }
            if position[d.index()].0 != usize::MAX {
                return Err(Error::Embedding(format!("dart {d} listed twice")));
            }
            position[d.index()] = (v, i);
        }
    }
    if let Some(i) = position.iter().position(|p| p.0 == usize::MAX) {
        return Err(Error::Embedding(format!("dart {} missing from the rotation system", dart_from_index(i))));
    }
    Ok(position)
}

/// A connected multigraph with a sphere embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Multigraph,
    rotation: Vec<Vec<Dart>>,
    faces: Vec<Face>,
    face_of: Vec<usize>,
}

impl PlaneGraph {
    /// Validates the rotation system, traces faces and checks Euler's
    /// formula `n - m + f = 2`.
    pub fn new(graph: Multigraph, rotation: Vec<Vec<Dart>>) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::Embedding("a plane graph needs at least one vertex".into()));
        }
        if !graph.is_connected() {
            return Err(Error::Embedding("plane graphs must be connected".into()));
        }
        let faces = trace_faces(&graph, &rotation)?;
        let (n, m, f) = (graph.n() as i64, graph.m() as i64, faces.len() as i64);
        if n - m + f != 2 {
            return Err(Error::Embedding(format!(
                "Euler's formula fails: n - m + f = {n} - {m} + {f} = {}, not a sphere embedding",
                n - m + f
            )));
        }
        let mut face_of = vec![0; 2 * graph.m()];
        for (i, face) in faces.iter().enumerate() {
            for d in &face.darts {
                face_of[d.index()] = i;
            }
        }
        Ok(PlaneGraph { graph, rotation, faces, face_of })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// The face on whose boundary `d` lies.
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.index()]
    }

    /// Dual vertex `i` is face `i`. Dual edge `e` runs from the face of the
    /// tail dart of `e` to the face of its head dart; a bridge becomes a
    /// loop. The rotation at a dual vertex is the boundary order of its face.
    pub fn dual(&self) -> PlaneGraph {
        let edges = (0..self.graph.m())
            .map(|e| Edge::new(self.face_of(Dart::tail(e)), self.face_of(Dart::head(e))))
            .collect();
        let graph = Multigraph::from_parts(self.faces.len(), edges);
        let rotation = self.faces.iter().map(|f| f.darts.clone()).collect();
        PlaneGraph::new(graph, rotation).expect("the dual of a sphere embedding is a sphere embedding")
    }

    /// Embedding of a connected edge subgraph inherited from this one.
    pub fn restrict(&self, sub: &EdgeSubgraph) -> Result<PlaneGraph> {
        let mut new_edge = vec![usize::MAX; self.graph.m()];
        for (i, &e) in sub.edge_ids.iter().enumerate() {
            new_edge[e] = i;
        }
        let rotation = sub
            .vertex_ids
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|d| new_edge[d.edge] != usize::MAX)
                    .map(|d| Dart { edge: new_edge[d.edge], end: d.end })
                    .collect()
            })
            .collect();
        PlaneGraph::new(sub.graph.clone(), rotation)
    }

    /// `t_f`: `+1` on edges the boundary walk of `face` follows forwards,
    /// `-1` on edges it follows backwards, summed when an edge is walked
    /// twice. Always balanced.
    pub fn face_boundary_flow(&self, face: usize, k: u32) -> Result<FlowAssignment> {
        let f = self
            .faces
            .get(face)
            .ok_or_else(|| Error::Input(format!("face {face} out of range ({} faces)", self.faces.len())))?;
        if k == 0 {
            return Err(Error::Precondition("flows need k >= 1".into()));
        }
        let mut raw = vec![0i64; self.graph.m()];
        for d in &f.darts {
            raw[d.edge] += d.sign();
        }
        Ok(FlowAssignment::from_integers(k, raw))
    }

    /// `t_s = sum over faces f of s(f) * t_f` for a coloring `s` of the faces.
    pub fn flow_from_dual_coloring(&self, s: &Coloring, k: u32) -> Result<FlowAssignment> {
        if s.values().len() != self.faces.len() {
            return Err(Error::Input(format!(
                "dual coloring has {} values but there are {} faces",
                s.values().len(),
                self.faces.len()
            )));
        }
        if s.modulus() != k {
            return Err(Error::Input(format!("coloring is modulo {}, expected {k}", s.modulus())));
        }
        let mut total = FlowAssignment::zero(k, self.graph.m());
        for face in 0..self.faces.len() {
            let tf = self.face_boundary_flow(face, k)?;
            total = total.add(&tf.scale(s.get(face)));
        }
        Ok(total)
    }

    /// Direct form of the same map: `t(e) = s(face of +e) - s(face of -e)`.
    fn dual_coloring_flow_values(&self, colors: &[u32], k: u32, out: &mut Vec<u32>) {
        out.clear();
        out.extend((0..self.graph.m()).map(|e| {
            let a = colors[self.face_of(Dart::tail(e))];
            let b = colors[self.face_of(Dart::head(e))];
            (a + k - b) % k
        }));
    }
}

/// Checks `C(G*) = k F(G)`.
pub fn verify_eq4(pg: &PlaneGraph) -> Verdict {
    let lhs = chromatic_polynomial(pg.dual().graph());
    let rhs = IntPoly::k() * flow_polynomial(pg.graph());
    Verdict::compare(Identity::DualFlow, lhs, rhs)
}

/// Checks the subgraph sum with `F(H)` replaced by `C(H*)/k`, cleared:
/// `k^m C(G) = k^(n-1) sum_H (-1)^m(H) (k-1)^(m-m(H)) C(H*)`.
///
/// For connected `H` the dual is traced from the inherited embedding. For
/// empty or disconnected `H`, whose sphere drawing a single rotation system
/// cannot carry, `C(H*)` is taken as `k F(H)`.
pub fn verify_eq5(pg: &PlaneGraph, limits: &Limits) -> Result<Verdict> {
    let g = pg.graph();
    let m = g.m();
    let powers = k_minus_one_powers(m);
    let mut chromatic = ChromaticCache::new();
    let mut flows = FlowCache::new();
    let mut sum = IntPoly::zero();
    let mut traced = 0usize;
    for h in g.edge_subgraphs(limits)? {
        let dual_chromatic = if h.graph.n() > 0 && h.graph.is_connected() {
            traced += 1;
            chromatic.compute(pg.restrict(&h)?.dual().graph())
        } else {
            IntPoly::k() * flows.compute(&h.graph)
        };
        let term = &powers[m - h.graph.m()] * &dual_chromatic;
        if h.graph.m() % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    let lhs = chromatic.compute(g).shift(m);
    let rhs = sum.shift(g.n() - 1);
    Ok(Verdict::compare(Identity::DualSubgraphSum, lhs, rhs)
        .with_note(format!("{traced} of {} duals traced", 1u64 << m)))
}

/// Checks the dual form: with `L` running over the contractions of `G*`
/// obtained by contracting the duals of `E(G) \ E(H)`,
/// `k^(n(G*)-1) C(G) = sum_L (-1)^m(L) (k-1)^(m-m(L)) C(L)`.
pub fn verify_eq6(pg: &PlaneGraph, limits: &Limits) -> Result<Verdict> {
    let g = pg.graph();
    let dual = pg.dual();
    let m = g.m();
    limits.check_edges(m)?;
    let powers = k_minus_one_powers(m);
    let mut chromatic = ChromaticCache::new();
    let mut sum = IntPoly::zero();
    for mask in 0..(1u64 << m) {
        // `mask` selects E(H); the complement is contracted in the dual.
        let contract: Vec<EdgeId> = (0..m).filter(|e| mask >> e & 1 == 0).collect();
        let l = dual.graph().contract_edges(&contract)?;
        let mh = mask.count_ones() as usize;
        if l.m() != mh {
            return Ok(Verdict::compare(Identity::ContractionSum, IntPoly::zero(), IntPoly::one())
                .with_note(format!("contraction for subset {mask:#b} has {} edges, expected {mh}", l.m())));
        }
        let term = &powers[m - mh] * &chromatic.compute(&l);
        if mh % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    let lhs = chromatic.compute(g).shift(dual.graph().n() - 1);
    Ok(Verdict::compare(Identity::ContractionSum, lhs, sum))
}

/// Checks that `(k-1)^2` divides `C(G) - (-1)^m C(G*)`. Needs `m > 1`.
pub fn verify_cor2(pg: &PlaneGraph) -> Result<Verdict> {
    let m = pg.graph().m();
    if m <= 1 {
        return Err(Error::Precondition(format!("the congruence needs m > 1, graph has m = {m}")));
    }
    let primal = chromatic_polynomial(pg.graph());
    let dual = chromatic_polynomial(pg.dual().graph());
    let diff = if m % 2 == 0 { primal - dual } else { primal + dual };
    let square = IntPoly::k_minus_one().pow(2);
    Ok(match diff.div_exact(&square) {
        Ok(q) => {
            let back = &square * &q;
            Verdict::compare(Identity::Congruence, diff, back).with_note(format!("quotient {q}"))
        }
        Err(Error::Inexact { remainder }) => Verdict {
            identity: Identity::Congruence,
            passed: false,
            lhs: diff.into(),
            rhs: IntPoly::zero().into(),
            note: Some(format!("remainder {remainder}")),
        },
        Err(e) => return Err(e),
    })
}

/// Unique 3-colorability check. The hypothesis is `C(G,3) = 6` with `G`
/// not a single edge; when it holds the dual must be 3-colorable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cor3Report {
    pub hypothesis: bool,
    pub primal_colorings: BigInt,
    pub dual_colorings: BigInt,
    pub passed: bool,
}

pub fn check_cor3(pg: &PlaneGraph) -> Cor3Report {
    let g = pg.graph();
    let three = BigInt::from(3);
    let primal_colorings = chromatic_polynomial(g).eval(&three);
    let dual_colorings = chromatic_polynomial(pg.dual().graph()).eval(&three);
    let single_edge = g.n() == 2 && g.m() == 1;
    let hypothesis = !single_edge && primal_colorings == BigInt::from(6);
    let passed = !hypothesis || dual_colorings > BigInt::zero();
    Cor3Report { hypothesis, primal_colorings, dual_colorings, passed }
}

impl Cor3Report {
    pub fn verdict(&self) -> Verdict {
        Verdict {
            identity: Identity::UniqueThreeColoring,
            passed: self.passed,
            lhs: self.primal_colorings.clone().into(),
            rhs: self.dual_colorings.clone().into(),
            note: Some(if self.hypothesis { "hypothesis holds" } else { "hypothesis fails, nothing to check" }.into()),
        }
    }
}

/// Counts gathered while checking the dual-coloring-to-flow map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub k: u32,
    pub colorings: u64,
    pub balanced_flows: u64,
    /// Balanced flows whose preimage does not have exactly `k` colorings.
    pub bad_buckets: u64,
    /// Images that are not balanced.
    pub unbalanced_images: u64,
    pub proper_colorings: u64,
    pub nowhere_zero_flows: u64,
    /// Colorings where properness and non-degeneracy of the image disagree.
    pub properness_mismatches: u64,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.bad_buckets == 0
            && self.unbalanced_images == 0
            && self.properness_mismatches == 0
            && self.colorings == u64::from(self.k) * self.balanced_flows
            && self.proper_colorings == u64::from(self.k) * self.nowhere_zero_flows
    }

    pub fn verdict(&self) -> Verdict {
        Verdict {
            identity: Identity::DualColoringFlows,
            passed: self.passed(),
            lhs: BigInt::from(self.colorings).into(),
            rhs: (BigInt::from(self.k) * self.balanced_flows).into(),
            note: Some(format!(
                "k={} balanced={} bad_buckets={} proper={} nowhere_zero={} mismatches={}",
                self.k,
                self.balanced_flows,
                self.bad_buckets,
                self.proper_colorings,
                self.nowhere_zero_flows,
                self.properness_mismatches
            )),
        }
    }
}

/// Enumerates every coloring of the faces, maps it to a flow and checks
/// that each balanced flow has exactly `k` preimages, that nothing else is
/// hit, and that proper colorings are exactly those with nowhere-zero
/// images.
pub fn verify_duality_correspondence(pg: &PlaneGraph, k: u32, limits: &Limits) -> Result<CorrespondenceReport> {
    if k == 0 {
        return Err(Error::Precondition("need k >= 1".into()));
    }
    limits.check_work(u64::from(k), pg.face_count(), "dual-coloring enumeration")?;
    limits.check_work(u64::from(k), pg.graph().m(), "flow enumeration")?;
    let dual = pg.dual();
    let g = pg.graph();
    let mut buckets: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut report = CorrespondenceReport {
        k,
        colorings: 0,
        balanced_flows: 0,
        bad_buckets: 0,
        unbalanced_images: 0,
        proper_colorings: 0,
        nowhere_zero_flows: 0,
        properness_mismatches: 0,
    };
    let mut odo = Odometer::new(k, pg.face_count());
    let mut values = Vec::new();
    while let Some((colors, _)) = odo.advance() {
        report.colorings += 1;
        pg.dual_coloring_flow_values(colors, k, &mut values);
        let proper = dual.graph().edges().iter().all(|e| colors[e.tail] != colors[e.head]);
        let nowhere_zero = values.iter().all(|&x| x != 0);
        report.proper_colorings += u64::from(proper);
        report.properness_mismatches += u64::from(proper != nowhere_zero);
        let t = FlowAssignment::new(k, values.clone())?;
        if !is_balanced(g, &t) {
            report.unbalanced_images += 1;
        }
        *buckets.entry(values.clone()).or_default() += 1;
    }
    let mut hit = 0u64;
    for_each_balanced_flow(g, k, limits, |t, zeros| {
        report.balanced_flows += 1;
        report.nowhere_zero_flows += u64::from(zeros == 0);
        match buckets.get(t) {
            Some(&c) => {
                hit += 1;
                if c != u64::from(k) {
                    report.bad_buckets += 1;
                }
            }
            None => report.bad_buckets += 1,
        }
    })?;
    // Images that are not balanced flows show up as extra buckets.
    report.bad_buckets += buckets.len() as u64 - hit;
    Ok(report)
}

/// Random connected plane multigraph with `m` edges grown by two moves:
/// hang a new vertex off some corner, or draw a new edge (possibly a loop)
/// between two corners of one face. Both keep the embedding spherical.
pub fn random_plane_graph<R: Rng>(rng: &mut R, m: usize) -> PlaneGraph {
    let mut edges: Vec<Edge> = Vec::new();
    let mut rotation: Vec<Vec<Dart>> = vec![Vec::new()];
    for e in 0..m {
        let graph = Multigraph::from_parts(rotation.len(), edges.clone());
        if rng.random_bool(0.4) {
            let v = rng.random_range(0..rotation.len());
            let w = rotation.len();
            let slot = rng.random_range(0..=rotation[v].len());
            let (edge, at_v, at_w) = if rng.random_bool(0.5) {
                (Edge::new(v, w), Dart::tail(e), Dart::head(e))
            } else {
                (Edge::new(w, v), Dart::head(e), Dart::tail(e))
            };
            edges.push(edge);
            rotation[v].insert(slot, at_v);
            rotation.push(vec![at_w]);
        } else {
            let faces = trace_faces(&graph, &rotation).expect("generator keeps the rotation valid");
            let face = &faces[rng.random_range(0..faces.len())];
            // A corner is the gap right after the dart we arrive on.
            let corners: Vec<(VertexId, Option<Dart>)> = if face.darts.is_empty() {
                vec![(0, None)]
            } else {
                face.darts
                    .iter()
                    .map(|d| {
                        let arrive = d.opposite();
                        (arrive.vertex(&graph), Some(arrive))
                    })
                    .collect()
            };
            let (v1, a1) = corners[rng.random_range(0..corners.len())];
            let (v2, a2) = corners[rng.random_range(0..corners.len())];
            let (edge, d1, d2) = if rng.random_bool(0.5) {
                (Edge::new(v1, v2), Dart::tail(e), Dart::head(e))
            } else {
                (Edge::new(v2, v1), Dart::head(e), Dart::tail(e))
            };
            edges.push(edge);
            insert_after(&mut rotation[v2], a2, d2);
            insert_after(&mut rotation[v1], a1, d1);
        }
    }
    let graph = Multigraph::from_parts(rotation.len(), edges);
    PlaneGraph::new(graph, rotation).expect("generator produces sphere embeddings")
}

fn insert_after(rot: &mut Vec<Dart>, anchor: Option<Dart>, d: Dart) {
    let at = match anchor {
        Some(a) => rot.iter().position(|&x| x == a).expect("anchor present") + 1,
        None => 0,
    };
    rot.insert(at, d);
}
