//! Graphs: construction from descriptors, components, shape recognition,
//! enumeration of small isomorphism classes and the purity classifier.

mod classify;
mod descriptor;
mod enumerate;
mod graph;
mod shape;

pub use classify::{classify_pure, Classification, PureClause};
pub use descriptor::parse_descriptor;
pub use enumerate::{
    canonical_code, canonical_form, enumerate_connected, is_isomorphic, MAX_CANONICAL_VERTICES,
    MAX_ENUMERATION_VERTICES,
};
pub use graph::Graph;
pub use shape::{detect_shape, GraphShape};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} outside 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("{0} needs at least {1} vertices")]
    TooFewVertices(&'static str, usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("not a permutation of the vertices")]
    BadPermutation,
    #[error("{0} vertices exceed the limit of {1}")]
    TooLarge(usize, usize),
    #[error("enumeration supports 1..=6 vertices, got {0}")]
    EnumerationRange(usize),
    #[error("malformed graph descriptor {0}")]
    Descriptor(String),
}
