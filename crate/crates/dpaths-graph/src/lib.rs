//! Graph model for disjoint-path counting: instances, validation, planar
//! embeddings, face tracing, and reduction to cubic instances.

pub mod embedding;
pub mod generate;
pub mod graph;
pub mod normalize;
pub mod planarity;
pub mod validate;

pub use embedding::{faces, Dart, EmbeddingError, PlanarEmbedding};
pub use generate::{random_cubic_planar, random_instance, GenerateError, RandomSpec};
pub use graph::{Edge, EdgeId, Graph, GraphError, Instance, Role, VertexId};
pub use normalize::{
    normalize_to_cubic, split_components, Component, NormalizeError, Normalized, ReductionTrace,
};
pub use planarity::{planar_embed, PlanarityError};
pub use validate::{validate, validate_terminal_lists, ValidationReport, Violation};
