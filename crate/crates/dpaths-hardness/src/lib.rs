//! Counting maximum independent sets of a cubic planar graph through a
//! disjoint-paths instance built from 8-cycle vertex gadgets and two-terminal
//! edge gadgets.

use dpaths_graph::{
    planar_embed, Edge, Graph, Instance, PlanarEmbedding, PlanarityError, VertexId,
};
use dpaths_solver::{solve, SolutionSummary, SolveError, SolveOptions};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HardnessError {
    #[error("vertex {0} has degree {1}; the reduction needs a cubic graph")]
    NonCubic(VertexId, usize),
    #[error("graph is not planar")]
    NonPlanar,
    #[error("graph is not simple")]
    NotSimple,
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Length of the cycle edge leaving position `i` (1-based) towards `i + 1`.
fn cycle_length(i: usize) -> u64 {
    match i {
        8 => 12,
        i if i % 2 == 1 => 2,
        _ => 1,
    }
}

#[derive(Clone, Debug)]
pub struct MisReductionInstance {
    pub instance: Instance,
    /// `cycle[v][i]` is the reduced vertex at position `i + 1` of the gadget of `v`.
    pub cycle: Vec<[VertexId; 8]>,
    /// The two B-terminals of each original edge.
    pub edge_terminals: Vec<[VertexId; 2]>,
}

impl MisReductionInstance {
    /// Length and count of an optimal solution translated into `(alpha, count)`.
    pub fn decode(
        &self,
        graph: &Graph,
        summary: &SolutionSummary,
    ) -> Result<(usize, BigUint), HardnessError> {
        let length = summary.length.ok_or_else(|| {
            HardnessError::InternalInconsistency("reduced instance has no solution".into())
        })?;
        let n = graph.vertex_count() as u64;
        let m = graph.edge_count() as u64;
        let alpha = (12 * n + 3 * m).checked_sub(length).ok_or_else(|| {
            HardnessError::InternalInconsistency(format!("optimum {length} is too long"))
        })?;
        let exponent = m.checked_sub(3 * alpha).ok_or_else(|| {
            HardnessError::InternalInconsistency(format!("alpha {alpha} exceeds |E|/3"))
        })?;
        let divisor = BigUint::one() << exponent;
        let (count, rem) = summary.count.div_rem(&divisor);
        if !rem.is_zero() {
            return Err(HardnessError::InternalInconsistency(format!(
                "solution count {} is not divisible by {divisor}",
                summary.count
            )));
        }
        Ok((alpha as usize, count))
    }
}

/// Builds the disjoint-paths instance for the cubic plane graph `(graph, embedding)`.
pub fn reduce_mis(
    graph: &Graph,
    embedding: &PlanarEmbedding,
) -> Result<MisReductionInstance, HardnessError> {
    if !graph.is_simple() {
        return Err(HardnessError::NotSimple);
    }
    if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) != 3) {
        return Err(HardnessError::NonCubic(v, graph.degree(v)));
    }
    embedding
        .verify(graph)
        .map_err(|_| HardnessError::NonPlanar)?;
    let n = graph.vertex_count();
    let cycle: Vec<[VertexId; 8]> = (0..n).map(|v| std::array::from_fn(|i| 8 * v + i)).collect();
    let mut edges = Vec::new();
    for c in &cycle {
        for i in 1..=8 {
            edges.push(Edge::new(c[i - 1], c[i % 8], cycle_length(i)));
        }
    }
    // Slot k of the rotation owns positions 2k + 2 and 2k + 3.
    let pair = |v: VertexId, w: VertexId| {
        let k = embedding.rotation[v]
            .iter()
            .position(|&x| x == w)
            .expect("neighbor in rotation");
        (cycle[v][2 * k + 1], cycle[v][2 * k + 2])
    };
    let mut edge_terminals = Vec::with_capacity(graph.edge_count());
    for (e, ed) in graph.edges().iter().enumerate() {
        let w1 = 8 * n + 2 * e;
        let w2 = w1 + 1;
        let (u_first, u_second) = pair(ed.u, ed.v);
        let (v_first, v_second) = pair(ed.v, ed.u);
        edges.extend([Edge::new(w1, u_first, 1), Edge::new(w1, v_second, 1)]);
        edges.extend([Edge::new(w2, u_second, 1), Edge::new(w2, v_first, 1)]);
        edge_terminals.push([w1, w2]);
    }
    let reduced =
        Graph::new(8 * n + 2 * graph.edge_count(), edges).expect("gadget vertices in range");
    let a: Vec<VertexId> = cycle.iter().flat_map(|c| [c[0], c[7]]).collect();
    let b: Vec<VertexId> = edge_terminals.iter().flatten().copied().collect();
    Ok(MisReductionInstance {
        instance: Instance::new(reduced, a, b),
        cycle,
        edge_terminals,
    })
}

/// Maximum independent set size and count of `graph`, computed by the disjoint-paths solver.
pub fn mis_via_solver(
    graph: &Graph,
    options: &SolveOptions,
) -> Result<(usize, BigUint), HardnessError> {
    let embedding = planar_embed(graph).map_err(|e| match e {
        PlanarityError::NonPlanar => HardnessError::NonPlanar,
        PlanarityError::NotSimple => HardnessError::NotSimple,
    })?;
    let reduction = reduce_mis(graph, &embedding)?;
    let report = solve(&reduction.instance, None, options)?;
    reduction.decode(graph, &report.summary)
}
