//! Directed graphs of orbits under a map with out-degree one everywhere:
//! canonical isomorphism codes, the strong-admissibility test, minimal
//! admissible completion, and classification against the fixed catalog of
//! portrait shapes that occur over the rationals and their quadratic
//! extensions.

mod catalog;
mod graph;

pub use catalog::{catalog_contains, catalog_graph, classify, PortraitLabel};
pub use graph::{
    admissible_completion, is_strongly_admissible, parse_graph_json, AdmissibilityReport,
    CanonicalCode, FunctionalGraph,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PortraitError {
    #[error("vertex {vertex} points at {target}, outside a graph of {len} vertices")]
    BadEdge { vertex: usize, target: usize, len: usize },
    #[error("{count} cycles of length {len} exceed the bound {bound}")]
    CycleBound { len: usize, count: usize, bound: num_bigint::BigInt },
    #[error("vertex {vertex} has in-degree {degree}; completion only adds parents")]
    InDegree { vertex: usize, degree: usize },
    #[error("operation requires a named catalog label")]
    UnnamedLabel,
    #[error("unknown portrait label {0:?}")]
    UnknownLabel(String),
    #[error("malformed graph JSON: {0}")]
    BadJson(String),
}
