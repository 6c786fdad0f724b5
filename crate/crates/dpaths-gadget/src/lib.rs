//! Expansion of a cubic planar instance into its gadget graph.
//!
//! Every nonterminal becomes a triangle and every terminal a three-leaf star
//! with a center. The three connectors of a vertex take over its edges in
//! rotation order, so the embedding of the expanded graph is built directly.

use std::collections::BTreeMap;

use dpaths_graph::{Edge, EdgeId, Graph, Instance, PlanarEmbedding, Role, VertexId};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("vertex {0} has degree {1}; the expansion needs a cubic graph")]
    NotCubic(VertexId, usize),
    #[error("rotation at vertex {0} does not list its neighbors")]
    BadRotation(VertexId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Triangle { vertex: VertexId, slot: usize },
    StarLeaf { terminal: VertexId, slot: usize },
    Center { terminal: VertexId },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Internal,
    External { original: EdgeId },
}

/// A subset of the terminals, indexed like [`GadgetGraph::terminals`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TerminalSubset {
    pub members: Vec<bool>,
}

impl TerminalSubset {
    pub fn from_mask(mask: u64, size: usize) -> Self {
        TerminalSubset {
            members: (0..size).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn complement(&self) -> Self {
        TerminalSubset {
            members: self.members.iter().map(|&m| !m).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub embedding: PlanarEmbedding,
    pub roles: Vec<VertexRole>,
    pub kinds: Vec<EdgeKind>,
    /// Connector at the lower endpoint of each original edge.
    pub f: Vec<VertexId>,
    /// Connector at the higher endpoint of each original edge.
    pub g: Vec<VertexId>,
    /// Terminals of the original instance, sorted.
    pub terminals: Vec<VertexId>,
    /// Center vertex of each terminal, parallel to `terminals`.
    pub centers: Vec<VertexId>,
}

/// `H(X)` with its renumbering.
#[derive(Clone, Debug)]
pub struct SubGadget {
    pub graph: Graph,
    pub embedding: PlanarEmbedding,
    /// Vertex of `H` behind each vertex of `H(X)`.
    pub original_id: Vec<VertexId>,
}

pub fn build_gadget_graph(
    instance: &Instance,
    embedding: &PlanarEmbedding,
) -> Result<GadgetGraph, GadgetError> {
    let g = &instance.graph;
    let n = g.vertex_count();
    for v in 0..n {
        if g.degree(v) != 3 {
            return Err(GadgetError::NotCubic(v, g.degree(v)));
        }
        let mut listed = embedding.rotation[v].clone();
        let mut actual: Vec<VertexId> = g.neighbors(v).collect();
        listed.sort_unstable();
        actual.sort_unstable();
        if listed != actual {
            return Err(GadgetError::BadRotation(v));
        }
    }
    let roles_g = instance.roles();
    let terminals = instance.terminals();
    let total = 3 * n + terminals.len();
    let slot = |v: VertexId, w: VertexId| {
        embedding.rotation[v]
            .iter()
            .position(|&x| x == w)
            .expect("neighbor")
    };
    let connector = |v: VertexId, w: VertexId| 3 * v + slot(v, w);

    let mut roles = Vec::with_capacity(total);
    for v in 0..n {
        for s in 0..3 {
            roles.push(match roles_g[v] {
                Role::Free => VertexRole::Triangle { vertex: v, slot: s },
                _ => VertexRole::StarLeaf {
                    terminal: v,
                    slot: s,
                },
            });
        }
    }
    let centers: Vec<VertexId> = (0..terminals.len()).map(|i| 3 * n + i).collect();
    roles.extend(
        terminals
            .iter()
            .map(|&t| VertexRole::Center { terminal: t }),
    );

    let mut edges = Vec::new();
    let mut rotation: Vec<Vec<VertexId>> = vec![Vec::new(); total];
    let mut center_of = BTreeMap::new();
    for (&t, &c) in terminals.iter().zip(&centers) {
        center_of.insert(t, c);
    }
    for v in 0..n {
        let c = |i: usize| 3 * v + i % 3;
        for i in 0..3 {
            let ext = connector(embedding.rotation[v][i], v);
            rotation[c(i)] = match center_of.get(&v) {
                None => vec![ext, c(i + 1), c(i + 2)],
                Some(&center) => vec![ext, center],
            };
        }
        match center_of.get(&v) {
            None => edges.extend([
                Edge::new(c(0), c(1), 0),
                Edge::new(c(1), c(2), 0),
                Edge::new(c(0), c(2), 0),
            ]),
            Some(&center) => {
                rotation[center] = vec![c(0), c(1), c(2)];
                edges.extend((0..3).map(|i| Edge::new(center, c(i), 0)));
            }
        }
    }
    let mut f = Vec::with_capacity(g.edge_count());
    let mut gg = Vec::with_capacity(g.edge_count());
    let mut external = BTreeMap::new();
    for (id, e) in g.edges().iter().enumerate() {
        let (cu, cv) = (connector(e.u, e.v), connector(e.v, e.u));
        f.push(cu);
        gg.push(cv);
        external.insert((cu.min(cv), cu.max(cv)), id);
        edges.push(Edge::new(cu, cv, e.length));
    }
    let graph = Graph::new(total, edges).expect("gadget vertices in range");
    let kinds = graph
        .edges()
        .iter()
        .map(|e| match external.get(&(e.u, e.v)) {
            Some(&original) => EdgeKind::External { original },
            None => EdgeKind::Internal,
        })
        .collect();
    Ok(GadgetGraph {
        graph,
        embedding: PlanarEmbedding { rotation },
        roles,
        kinds,
        f,
        g: gg,
        terminals,
        centers,
    })
}

impl GadgetGraph {
    pub fn terminal_count(&self) -> usize {
        self.terminals.len()
    }

    pub fn full_subset(&self) -> TerminalSubset {
        TerminalSubset {
            members: vec![true; self.terminals.len()],
        }
    }

    /// Drops the centers of terminals outside `x` and renumbers densely.
    pub fn subgraph_hx(&self, x: &TerminalSubset) -> SubGadget {
        let total = self.graph.vertex_count();
        let mut keep = vec![true; total];
        for (i, &c) in self.centers.iter().enumerate() {
            keep[c] = x.members[i];
        }
        let mut new_id = vec![usize::MAX; total];
        let mut original_id = Vec::new();
        for v in 0..total {
            if keep[v] {
                new_id[v] = original_id.len();
                original_id.push(v);
            }
        }
        let graph = Graph::new(
            original_id.len(),
            self.graph
                .edges()
                .iter()
                .filter(|e| keep[e.u] && keep[e.v])
                .map(|e| Edge::new(new_id[e.u], new_id[e.v], e.length)),
        )
        .expect("kept vertices in range");
        SubGadget {
            graph,
            embedding: self.embedding.restrict(&keep, &new_id),
            original_id,
        }
    }

    /// Original edges used by a matching of `H`, given as gadget edge ids.
    pub fn external_edges(&self, matching: &[EdgeId]) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = matching
            .iter()
            .filter_map(|&e| match self.kinds[e] {
                EdgeKind::External { original } => Some(original),
                EdgeKind::Internal => None,
            })
            .collect();
        out.sort_unstable();
        out
    }
}
