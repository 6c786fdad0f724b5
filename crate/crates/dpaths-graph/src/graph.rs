//! Undirected edge-weighted graphs with dense vertex ids.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// An undirected edge stored with `u <= v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub length: u64,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId, length: u64) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Edge { u, v, length }
    }

    /// The endpoint opposite to `w`.
    pub fn other(&self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn key(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index} ({u}, {v}) references a vertex outside 0..{vertex_count}")]
    VertexOutOfRange {
        index: usize,
        u: VertexId,
        v: VertexId,
        vertex_count: usize,
    },
}

/// Edges are kept sorted by `(u, v, length)`, which fixes every iteration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, GraphError> {
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|e| Edge::new(e.u, e.v, e.length))
            .collect();
        for (index, e) in edges.iter().enumerate() {
            if e.v >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    index,
                    u: e.u,
                    v: e.v,
                    vertex_count,
                });
            }
        }
        edges.sort();
        let mut incidence = vec![Vec::new(); vertex_count];
        for (id, e) in edges.iter().enumerate() {
            incidence[e.u].push(id);
            if e.v != e.u {
                incidence[e.v].push(id);
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
            incidence,
        })
    }

    /// Builds a graph from `(u, v, length)` triples.
    pub fn from_triples(
        vertex_count: usize,
        triples: &[(VertexId, VertexId, u64)],
    ) -> Result<Self, GraphError> {
        Graph::new(
            vertex_count,
            triples.iter().map(|&(u, v, l)| Edge::new(u, v, l)),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incidence[v]
            .iter()
            .map(move |&e| self.edges[e].other(v))
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_cubic(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() == 3)
    }

    /// Edge id joining `a` and `b`, if any.
    pub fn find_edge(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        self.incidence[u]
            .iter()
            .copied()
            .find(|&e| self.edges[e].u == u && self.edges[e].v == v)
    }

    /// Sum of all edge lengths.
    pub fn total_length(&self) -> u64 {
        self.edges.iter().map(|e| e.length).sum()
    }

    pub fn has_self_loop(&self) -> bool {
        self.edges.iter().any(|e| e.u == e.v)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edges.windows(2).any(|w| w[0].key() == w[1].key())
    }

    pub fn is_simple(&self) -> bool {
        !self.has_self_loop() && !self.has_parallel_edges()
    }

    /// Returns a copy with the same structure and new lengths (indexed like `edges()`).
    pub fn with_lengths(&self, lengths: &[u64]) -> Graph {
        assert_eq!(lengths.len(), self.edges.len());
        let edges = self
            .edges
            .iter()
            .zip(lengths)
            .map(|(e, &l)| Edge { length: l, ..*e })
            .collect();
        Graph {
            vertex_count: self.vertex_count,
            edges,
            incidence: self.incidence.clone(),
        }
    }

    /// Component index per vertex and the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }
}

/// Terminal role of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Free,
    A,
    B,
}

/// A graph together with the two terminal sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
}

impl Instance {
    /// Terminal lists are sorted and deduplicated.
    pub fn new(
        graph: Graph,
        a: impl IntoIterator<Item = VertexId>,
        b: impl IntoIterator<Item = VertexId>,
    ) -> Self {
        let a: BTreeSet<VertexId> = a.into_iter().collect();
        let b: BTreeSet<VertexId> = b.into_iter().collect();
        Instance {
            graph,
            a: a.into_iter().collect(),
            b: b.into_iter().collect(),
        }
    }

    /// Role of each vertex; a vertex listed in both sets reports `A`.
    pub fn roles(&self) -> Vec<Role> {
        let mut roles = vec![Role::Free; self.graph.vertex_count()];
        for &z in &self.b {
            if z < roles.len() {
                roles[z] = Role::B;
            }
        }
        for &z in &self.a {
            if z < roles.len() {
                roles[z] = Role::A;
            }
        }
        roles
    }

    /// The terminal set `A ∪ B` in increasing order.
    pub fn terminals(&self) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self.a.iter().chain(&self.b).copied().collect();
        set.into_iter().collect()
    }

    pub fn terminal_count(&self) -> usize {
        self.a.len() + self.b.len()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {})", self.u, self.v, self.length)
    }
}
