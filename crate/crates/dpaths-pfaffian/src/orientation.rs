//! Kasteleyn orientation via a spanning tree and its dual cotree.

use std::collections::VecDeque;

use dpaths_graph::{Dart, EdgeId, Graph, PlanarEmbedding};

/// Direction of every edge: `forward[e]` means `u -> v` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub forward: Vec<bool>,
}

impl Orientation {
    /// `+1` if the edge between `a` and `b` is directed `a -> b`, else `-1`.
    pub fn sign(&self, graph: &Graph, e: EdgeId, a: usize) -> i8 {
        let tail_is_u = self.forward[e];
        if (graph.edge(e).u == a) == tail_is_u {
            1
        } else {
            -1
        }
    }

    fn agrees(&self, graph: &Graph, e: EdgeId, dart: Dart) -> bool {
        self.sign(graph, e, dart.0) == 1
    }
}

fn dart_edge(graph: &Graph, dart: Dart) -> EdgeId {
    graph
        .find_edge(dart.0, dart.1)
        .expect("dart of an embedded edge")
}

/// Number of darts along `face` that agree with `orientation`.
fn agreeing(graph: &Graph, orientation: &Orientation, face: &[Dart]) -> usize {
    face.iter()
        .filter(|&&d| orientation.agrees(graph, dart_edge(graph, d), d))
        .count()
}

/// Orients `graph` so that every face except one per component has an odd number of agreeing darts.
pub fn kasteleyn_orient(graph: &Graph, embedding: &PlanarEmbedding) -> Orientation {
    let n = graph.vertex_count();
    let mut in_tree = vec![false; graph.edge_count()];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in graph.incident_edges(v) {
                let w = graph.edge(e).other(v);
                if !seen[w] {
                    seen[w] = true;
                    in_tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut orientation = Orientation {
        forward: vec![true; graph.edge_count()],
    };
    let faces = embedding.faces();
    let index = PlanarEmbedding::face_index(&faces);
    let mut face_seen = vec![false; faces.len()];
    for root in 0..faces.len() {
        if face_seen[root] {
            continue;
        }
        face_seen[root] = true;
        let mut order = vec![root];
        let mut parent_edge: Vec<Option<EdgeId>> = vec![None; faces.len()];
        let mut head = 0;
        while head < order.len() {
            let f = order[head];
            head += 1;
            for &(a, b) in &faces[f] {
                let e = dart_edge(graph, (a, b));
                if in_tree[e] {
                    continue;
                }
                let g = index[&(b, a)];
                if !face_seen[g] {
                    face_seen[g] = true;
                    parent_edge[g] = Some(e);
                    order.push(g);
                }
            }
        }
        for &f in order.iter().rev() {
            let Some(e) = parent_edge[f] else { continue };
            let own = faces[f]
                .iter()
                .find(|&&d| dart_edge(graph, d) == e)
                .copied()
                .expect("parent edge on face");
            let others = faces[f]
                .iter()
                .filter(|&&d| d != own && orientation.agrees(graph, dart_edge(graph, d), d))
                .count();
            let want_agree = others % 2 == 0;
            let edge = graph.edge(e);
            orientation.forward[e] = (own.0 == edge.u) == want_agree;
        }
    }
    orientation
}

/// True when each component has at most one face with an even number of agreeing darts.
pub fn verify_orientation(
    graph: &Graph,
    embedding: &PlanarEmbedding,
    orientation: &Orientation,
) -> bool {
    if orientation.forward.len() != graph.edge_count() {
        return false;
    }
    let (comp, count) = graph.components();
    let mut even = vec![0usize; count];
    for face in embedding.faces() {
        if agreeing(graph, orientation, &face) % 2 == 0 {
            even[comp[face[0].0]] += 1;
        }
    }
    even.iter().all(|&k| k <= 1)
}
