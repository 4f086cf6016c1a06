//! Chromatic and flow polynomials of multigraphs, with exhaustive oracles and
//! verifiers for the subgraph-sum representation of the chromatic polynomial
//! and its consequences for plane graphs and their duals.

pub mod assignments;
pub mod chromatic;
pub mod corpus;
pub mod error;
pub mod flows;
pub mod format;
pub mod generators;
pub mod harness;
pub mod identity;
pub mod limits;
pub mod multigraph;
pub mod planar;
pub mod polyring;
pub mod verdict;

pub use chromatic::{chromatic_polynomial, count_proper_colorings, Coloring};
pub use error::{Error, Result};
pub use flows::{flow_polynomial, FlowAssignment};
pub use limits::Limits;
pub use multigraph::{Edge, EdgeId, EdgeSubgraph, Multigraph, VertexId};
pub use polyring::IntPoly;
pub use format::{parse_graph_file, GraphFile};
pub use identity::{subgraph_sum, verify_eq10, verify_theorem, w_function, WFunctionValue};
pub use planar::{Dart, PlaneGraph};
pub use verdict::{Identity, Value, Verdict};
