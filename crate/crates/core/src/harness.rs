//! Running identities by name, and the seeded fuzzing harness.
//!
//! Random graphs come from ChaCha8 seeded with the user's `u64` seed; the
//! trial order and every draw are fixed by that seed alone.

use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::flows::FlowCache;
use crate::generators::random_multigraph;
use crate::identity::{verify_eq10_with, verify_theorem_with};
use crate::limits::Limits;
use crate::multigraph::Multigraph;
use crate::planar::{
    check_cor3, random_plane_graph, verify_cor2, verify_duality_correspondence, verify_eq4, verify_eq5,
    verify_eq6, PlaneGraph,
};
use crate::verdict::{Identity, Verdict};

/// Runs one identity. Planar identities need `plane`; `k` is used by the
/// identities that are checked at a single integer.
pub fn run_identity(
    identity: Identity,
    graph: &Multigraph,
    plane: Option<&PlaneGraph>,
    k: u32,
    limits: &Limits,
) -> Result<Verdict> {
    let plane = || {
        plane.ok_or_else(|| Error::Input(format!("identity {identity} needs a graph with an embedding")))
    };
    match identity {
        Identity::SubgraphSum => verify_theorem_with(graph, limits, &mut FlowCache::new()),
        Identity::DegeneracySum => verify_eq10_with(graph, k, limits),
        Identity::DualFlow => Ok(verify_eq4(plane()?)),
        Identity::DualSubgraphSum => verify_eq5(plane()?, limits),
        Identity::ContractionSum => verify_eq6(plane()?, limits),
        Identity::Congruence => verify_cor2(plane()?),
        Identity::UniqueThreeColoring => Ok(check_cor3(plane()?).verdict()),
        Identity::DualColoringFlows => Ok(verify_duality_correspondence(plane()?, k, limits)?.verdict()),
    }
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub max_edges: usize,
    pub trials: usize,
    pub seed: u64,
    pub identities: Vec<Identity>,
    pub k: u32,
    pub limits: Limits,
}

/// One identity to check on one generated graph.
#[derive(Clone, Debug)]
pub struct FuzzCase {
    pub trial: usize,
    pub identity: Identity,
    pub graph: Multigraph,
    pub plane: Option<PlaneGraph>,
}

impl FuzzCase {
    /// Compact one-line description that is enough to rebuild the graph.
    pub fn descriptor(&self) -> String {
        describe(&self.graph, self.plane.as_ref())
    }
}

pub fn describe(graph: &Multigraph, plane: Option<&PlaneGraph>) -> String {
    let mut out = format!("n={} m={} edges=", graph.n(), graph.m());
    let edges: Vec<String> = graph.edges().iter().map(|e| format!("{}>{}", e.tail, e.head)).collect();
    out.push_str(if edges.is_empty() { "-" } else { "" });
    out.push_str(&edges.join(","));
    if let Some(pg) = plane {
        out.push_str(" rot=");
        let rots: Vec<String> = pg
            .rotation()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        let _ = write!(out, "{}", rots.join(";"));
    }
    out
}

/// Outcome of one fuzz case. Precondition and cap errors skip the case
/// instead of failing the run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Checked(Verdict),
    Skipped(String),
}

impl Outcome {
    pub fn failed(&self) -> bool {
        matches!(self, Outcome::Checked(v) if !v.passed)
    }
}

/// Generates the cases of a fuzz run. Each trial draws a random multigraph
/// (`1..=max_edges+1` vertices, `0..=max_edges` uniform edges, so loops and
/// parallels occur) and, when a planar identity is requested, a random plane
/// graph with at most `max_edges` edges.
pub fn fuzz_cases(cfg: &FuzzConfig) -> Result<Vec<FuzzCase>> {
    cfg.limits.check_edges(cfg.max_edges)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let wants_plane = cfg.identities.iter().any(|i| i.needs_embedding());
    let wants_graph = cfg.identities.iter().any(|i| !i.needs_embedding());
    let mut cases = Vec::new();
    for trial in 0..cfg.trials {
        let graph = if wants_graph {
            let n = rng.random_range(1..=cfg.max_edges + 1);
            let m = rng.random_range(0..=cfg.max_edges);
            Some(random_multigraph(&mut rng, n, m))
        } else {
            None
        };
        let plane = if wants_plane {
            let m = rng.random_range(0..=cfg.max_edges);
            Some(random_plane_graph(&mut rng, m))
        } else {
            None
        };
        for &identity in &cfg.identities {
            let (graph, plane) = if identity.needs_embedding() {
                let pg = plane.clone().expect("plane graph drawn");
                (pg.graph().clone(), Some(pg))
            } else {
                (graph.clone().expect("graph drawn"), None)
            };
            cases.push(FuzzCase { trial, identity, graph, plane });
        }
    }
    Ok(cases)
}

pub fn run_case(case: &FuzzCase, cfg: &FuzzConfig) -> Outcome {
    match run_identity(case.identity, &case.graph, case.plane.as_ref(), cfg.k, &cfg.limits) {
        Ok(v) => Outcome::Checked(v),
        Err(e) => Outcome::Skipped(e.to_string()),
    }
}
