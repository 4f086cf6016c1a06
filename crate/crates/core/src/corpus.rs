//! Bundled plane graphs with hand-checked embeddings.

use crate::error::{Error, Result};
use crate::format::{parse_graph_file, GraphFile};
use crate::planar::PlaneGraph;

/// The embedded graphs every planar identity is checked against.
pub const PLANE_NAMES: [&str; 9] = ["k2", "p3", "c3", "c4", "theta", "k4", "w4", "prism", "cube"];

/// Extra embeddings with parallel edges and loops.
pub const EXTRA_NAMES: [&str; 2] = ["dipole3", "lollipop"];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "k2" => include_str!("../corpus/k2.g"),
        "p3" => include_str!("../corpus/p3.g"),
        "c3" => include_str!("../corpus/c3.g"),
        "c4" => include_str!("../corpus/c4.g"),
        "theta" => include_str!("../corpus/theta.g"),
        "k4" => include_str!("../corpus/k4.g"),
        "w4" => include_str!("../corpus/w4.g"),
        "prism" => include_str!("../corpus/prism.g"),
        "cube" => include_str!("../corpus/cube.g"),
        "dipole3" => include_str!("../corpus/dipole3.g"),
        "lollipop" => include_str!("../corpus/lollipop.g"),
        _ => return None,
    })
}

pub fn graph_file(name: &str) -> Result<GraphFile> {
    let text = source(name).ok_or_else(|| Error::Input(format!("no corpus graph named {name:?}")))?;
    parse_graph_file(text)
}

pub fn plane_graph(name: &str) -> Result<PlaneGraph> {
    graph_file(name)?
        .plane
        .ok_or_else(|| Error::Input(format!("corpus graph {name:?} has no embedding")))
}

/// Every bundled plane graph, in a fixed order.
pub fn all_plane_graphs() -> Vec<(&'static str, PlaneGraph)> {
    PLANE_NAMES
        .iter()
        .chain(EXTRA_NAMES.iter())
        .map(|&name| (name, plane_graph(name).expect("bundled corpus parses")))
        .collect()
}
