//! Rotation systems and face tracing.

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// A directed copy of an edge, `(tail, head)`.
pub type Dart = (VertexId, VertexId);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("rotation has {found} entries for {expected} vertices")]
    WrongVertexCount { expected: usize, found: usize },
    #[error("rotation at vertex {vertex} is not a permutation of its neighbors")]
    NotAPermutation { vertex: VertexId },
    #[error("rotation system fails the Euler check in the component of vertex {vertex}: V - E + F = {euler}")]
    NotPlanar { vertex: VertexId, euler: i64 },
}

/// Cyclic neighbor order around every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    pub rotation: Vec<Vec<VertexId>>,
}

impl PlanarEmbedding {
    /// Neighbor following `u` in the rotation at `v`.
    pub fn successor(&self, v: VertexId, u: VertexId) -> VertexId {
        let rot = &self.rotation[v];
        let i = rot
            .iter()
            .position(|&w| w == u)
            .expect("dart not present in rotation");
        rot[(i + 1) % rot.len()]
    }

    /// Traces all faces; each face lists its darts in traversal order.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen: HashSet<Dart> = HashSet::new();
        let mut faces = Vec::new();
        for v in 0..self.rotation.len() {
            for &w in &self.rotation[v] {
                if seen.contains(&(v, w)) {
                    continue;
                }
                let mut face = Vec::new();
                let mut dart = (v, w);
                while seen.insert(dart) {
                    face.push(dart);
                    let (a, b) = dart;
                    dart = (b, self.successor(b, a));
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Face index of every dart.
    pub fn face_index(faces: &[Vec<Dart>]) -> BTreeMap<Dart, usize> {
        let mut index = BTreeMap::new();
        for (i, f) in faces.iter().enumerate() {
            for &d in f {
                index.insert(d, i);
            }
        }
        index
    }

    /// Checks that the rotation matches `graph` and is planar in every component.
    pub fn verify(&self, graph: &Graph) -> Result<(), EmbeddingError> {
        let n = graph.vertex_count();
        if self.rotation.len() != n {
            return Err(EmbeddingError::WrongVertexCount {
                expected: n,
                found: self.rotation.len(),
            });
        }
        for v in 0..n {
            let mut expected: Vec<VertexId> = graph.neighbors(v).collect();
            let mut found = self.rotation[v].clone();
            expected.sort_unstable();
            found.sort_unstable();
            if expected != found {
                return Err(EmbeddingError::NotAPermutation { vertex: v });
            }
        }
        let (comp, count) = graph.components();
        let mut verts = vec![0i64; count];
        let mut edges = vec![0i64; count];
        let mut faces = vec![0i64; count];
        for v in 0..n {
            verts[comp[v]] += 1;
            edges[comp[v]] += graph.degree(v) as i64;
        }
        for face in self.faces() {
            faces[comp[face[0].0]] += 1;
        }
        for c in 0..count {
            let e = edges[c] / 2;
            let f = faces[c].max(1);
            let euler = verts[c] - e + f;
            if euler != 2 {
                let vertex = comp.iter().position(|&x| x == c).unwrap_or(0);
                return Err(EmbeddingError::NotPlanar { vertex, euler });
            }
        }
        Ok(())
    }

    /// Rotation restricted to the vertices kept by `keep`, renumbered densely via `new_id`.
    pub fn restrict(&self, keep: &[bool], new_id: &[usize]) -> PlanarEmbedding {
        let rotation = (0..self.rotation.len())
            .filter(|&v| keep[v])
            .map(|v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        PlanarEmbedding { rotation }
    }
}

/// Faces of a graph under `embedding`; same as [`PlanarEmbedding::faces`].
pub fn faces(embedding: &PlanarEmbedding) -> Vec<Vec<Dart>> {
    embedding.faces()
}
