//! Validation, embedding, component split, normalization and gadget expansion.

use dpaths_gadget::{build_gadget_graph, GadgetGraph};
use dpaths_graph::{
    normalize_to_cubic, planar_embed, split_components, validate, EdgeId, Instance, NormalizeError,
    Normalized, PlanarEmbedding, Violation,
};

use crate::SolveError;

/// One connected component, reduced to a cubic instance and expanded.
#[derive(Clone, Debug)]
pub struct Part {
    /// Original edge id of each component edge.
    pub component_edges: Vec<EdgeId>,
    pub normalized: Normalized,
    pub gadget: GadgetGraph,
    /// Total edge length of the cubic instance.
    pub lambda: u64,
}

#[derive(Clone, Debug)]
pub struct Prepared {
    pub instance: Instance,
    pub embedding: PlanarEmbedding,
    /// `Err` carries the reason an instance is known to have no solution.
    pub parts: Result<Vec<Part>, String>,
}

/// Validates `instance` and runs the reduction pipeline.
pub fn prepare(
    instance: &Instance,
    rotation: Option<&PlanarEmbedding>,
) -> Result<Prepared, SolveError> {
    let report = validate(instance);
    if !report.is_valid() {
        return Err(SolveError::Validation(report));
    }
    let embedding = match rotation {
        Some(emb) => {
            emb.verify(&instance.graph)?;
            emb.clone()
        }
        None => planar_embed(&instance.graph)?,
    };
    Ok(build(instance.clone(), embedding))
}

/// Reruns the pipeline on the same graph with new edge lengths; zero lengths are allowed.
pub fn prepare_with_lengths(prepared: &Prepared, lengths: &[u64]) -> Result<Prepared, SolveError> {
    let graph = prepared.instance.graph.with_lengths(lengths);
    let instance = Instance::new(
        graph,
        prepared.instance.a.clone(),
        prepared.instance.b.clone(),
    );
    let report = validate(&instance);
    if report
        .violations
        .iter()
        .any(|v| !matches!(v, Violation::LengthOutOfRange { .. }))
    {
        return Err(SolveError::Validation(report));
    }
    Ok(build(instance, prepared.embedding.clone()))
}

fn build(instance: Instance, embedding: PlanarEmbedding) -> Prepared {
    let parts = split_components(&instance, &embedding).and_then(|components| {
        components
            .into_iter()
            .map(|c| {
                let normalized = normalize_to_cubic(&c.instance, &c.embedding)?;
                let gadget = build_gadget_graph(&normalized.instance, &normalized.embedding)
                    .expect("normalized instances are cubic with a matching rotation");
                let lambda = normalized.instance.graph.total_length();
                Ok(Part {
                    component_edges: c.edge_ids,
                    normalized,
                    gadget,
                    lambda,
                })
            })
            .collect::<Result<Vec<_>, NormalizeError>>()
    });
    Prepared {
        instance,
        embedding,
        parts: parts.map_err(|NormalizeError::Infeasible { reason }| reason),
    }
}
