//! Seeded random planar instances.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Edge, Graph, Instance, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
}

/// Parameters of a random instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    /// Vertex count of the cubic base graph; even and at least 4.
    pub n: usize,
    pub max_length: u64,
    pub a_count: usize,
    pub b_count: usize,
    /// Edges deleted from the cubic base graph while keeping it connected.
    pub removed_edges: usize,
    pub seed: u64,
}

/// Random simple 3-connected cubic planar graph on `n` vertices with unit lengths.
///
/// Built as the dual of a random triangulation of the sphere grown by vertex
/// insertions and randomized by edge flips.
pub fn random_cubic_planar<R: Rng>(n: usize, rng: &mut R) -> Result<Graph, GenerateError> {
    if n < 4 || n % 2 == 1 {
        return Err(GenerateError::InfeasibleParameters(format!(
            "n = {n} must be even and at least 4"
        )));
    }
    let mut triangles: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut vertex_count = 4;
    while triangles.len() < n {
        let i = rng.gen_range(0..triangles.len());
        let [a, b, c] = triangles[i];
        let x = vertex_count;
        vertex_count += 1;
        triangles[i] = [a, b, x];
        triangles.push([b, c, x]);
        triangles.push([a, c, x]);
    }
    for _ in 0..4 * n {
        let owners = edge_owners(&triangles);
        let keys: Vec<(usize, usize)> = owners.keys().copied().collect();
        let (a, b) = keys[rng.gen_range(0..keys.len())];
        let [t1, t2] = owners[&(a, b)];
        let c = third(triangles[t1], a, b);
        let d = third(triangles[t2], a, b);
        let degree = |v: usize| owners.keys().filter(|&&(p, q)| p == v || q == v).count();
        if c == d || owners.contains_key(&(c.min(d), c.max(d))) || degree(a) <= 3 || degree(b) <= 3
        {
            continue;
        }
        triangles[t1] = [a, c, d];
        triangles[t2] = [b, c, d];
    }
    let owners = edge_owners(&triangles);
    let edges = owners.values().map(|&[t1, t2]| Edge::new(t1, t2, 1));
    Ok(Graph::new(n, edges).expect("dual vertices in range"))
}

fn third(t: [usize; 3], a: usize, b: usize) -> usize {
    *t.iter()
        .find(|&&x| x != a && x != b)
        .expect("triangle has a third vertex")
}

fn edge_owners(triangles: &[[usize; 3]]) -> BTreeMap<(usize, usize), [usize; 2]> {
    let mut owners: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, t) in triangles.iter().enumerate() {
        for (p, q) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            owners.entry((p.min(q), p.max(q))).or_default().push(i);
        }
    }
    owners.into_iter().map(|(k, v)| (k, [v[0], v[1]])).collect()
}

/// Random connected max-degree-3 planar instance; deterministic in `spec.seed`.
pub fn random_instance(spec: &RandomSpec) -> Result<Instance, GenerateError> {
    if spec.max_length == 0 {
        return Err(GenerateError::InfeasibleParameters(
            "max_length must be at least 1".into(),
        ));
    }
    if spec.a_count == 0 || spec.a_count % 2 == 1 || spec.b_count % 2 == 1 {
        return Err(GenerateError::InfeasibleParameters(
            "|A| must be even and positive, |B| even".into(),
        ));
    }
    if spec.a_count + spec.b_count > spec.n {
        return Err(GenerateError::InfeasibleParameters(
            "more terminals than vertices".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let base = random_cubic_planar(spec.n, &mut rng)?;
    let mut edges: Vec<Edge> = base.edges().to_vec();
    let mut removed = 0;
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.shuffle(&mut rng);
    let mut dropped = vec![false; edges.len()];
    for &i in &order {
        if removed == spec.removed_edges {
            break;
        }
        dropped[i] = true;
        let trial = Graph::new(
            spec.n,
            edges
                .iter()
                .zip(&dropped)
                .filter(|(_, &d)| !d)
                .map(|(e, _)| *e),
        )
        .expect("same vertex set");
        let no_isolated = (0..spec.n).all(|v| trial.degree(v) > 0);
        if trial.is_connected() && no_isolated {
            removed += 1;
        } else {
            dropped[i] = false;
        }
    }
    if removed < spec.removed_edges {
        return Err(GenerateError::InfeasibleParameters(format!(
            "could only remove {removed} of {} edges while staying connected",
            spec.removed_edges
        )));
    }
    for e in edges.iter_mut() {
        e.length = rng.gen_range(1..=spec.max_length);
    }
    let graph = Graph::new(
        spec.n,
        edges
            .into_iter()
            .zip(dropped)
            .filter(|(_, d)| !d)
            .map(|(e, _)| e),
    )
    .expect("same vertex set");
    let mut vertices: Vec<VertexId> = (0..spec.n).collect();
    vertices.shuffle(&mut rng);
    let a = vertices[..spec.a_count].to_vec();
    let b = vertices[spec.a_count..spec.a_count + spec.b_count].to_vec();
    Ok(Instance::new(graph, a, b))
}
