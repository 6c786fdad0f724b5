//! Planarity testing by incremental path embedding on biconnected blocks.
//!
//! Each block is embedded by repeatedly routing a path of some unembedded
//! fragment through a face that contains all of its attachment vertices.
//! Block rotations are then concatenated at cut vertices.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::embedding::PlanarEmbedding;
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarityError {
    #[error("graph is not planar")]
    NonPlanar,
    #[error("graph is not simple")]
    NotSimple,
}

/// Computes a planar rotation system, deterministically for a fixed input.
pub fn planar_embed(graph: &Graph) -> Result<PlanarEmbedding, PlanarityError> {
    if !graph.is_simple() {
        return Err(PlanarityError::NotSimple);
    }
    let n = graph.vertex_count();
    let mut rotation: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for block in biconnected_blocks(graph) {
        if block.len() == 1 {
            let e = graph.edge(block[0]);
            rotation[e.u].push(e.v);
            rotation[e.v].push(e.u);
            continue;
        }
        let local = embed_block(graph, &block)?;
        for (v, rot) in local {
            rotation[v].extend(rot);
        }
    }
    let embedding = PlanarEmbedding { rotation };
    debug_assert!(embedding.verify(graph).is_ok());
    Ok(embedding)
}

/// Edge sets of the biconnected blocks, each sorted; blocks ordered by smallest edge id.
fn biconnected_blocks(graph: &Graph) -> Vec<Vec<EdgeId>> {
    let n = graph.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // Frames: (vertex, parent edge, next incidence index).
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (v, parent_edge, ref mut next)) = stack.last_mut() {
            let inc = graph.incident_edges(v);
            if *next < inc.len() {
                let e = inc[*next];
                *next += 1;
                if Some(e) == parent_edge {
                    continue;
                }
                let w = graph.edge(e).other(v);
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(pe), Some(&(u, _, _))) = (parent_edge, stack.last()) {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// Embeds one biconnected block with at least two edges; returns per-vertex local rotations.
fn embed_block(
    graph: &Graph,
    block: &[EdgeId],
) -> Result<Vec<(VertexId, Vec<VertexId>)>, PlanarityError> {
    let verts: BTreeSet<VertexId> = block
        .iter()
        .flat_map(|&e| [graph.edge(e).u, graph.edge(e).v])
        .collect();
    let verts: Vec<VertexId> = verts.into_iter().collect();
    let local = |v: VertexId| verts.binary_search(&v).expect("vertex in block");
    let k = verts.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (i, &e) in block.iter().enumerate() {
        let (a, b) = (local(graph.edge(e).u), local(graph.edge(e).v));
        adj[a].push((b, i));
        adj[b].push((a, i));
    }

    let mut vertex_in = vec![false; k];
    let mut edge_in = vec![false; block.len()];
    let cycle = find_cycle(&adj);
    for i in 0..cycle.len() {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        vertex_in[a] = true;
        let ei = adj[a].iter().find(|&&(w, _)| w == b).expect("cycle edge").1;
        edge_in[ei] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    loop {
        let fragments = fragments(&adj, &vertex_in, &edge_in);
        if fragments.is_empty() {
            break;
        }
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return Err(PlanarityError::NonPlanar),
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("some fragment");
        let path = fragment_path(&adj, &vertex_in, &fragments[fi]);
        for w in path.windows(2) {
            let ei = adj[w[0]]
                .iter()
                .find(|&&(x, _)| x == w[1])
                .expect("path edge")
                .1;
            edge_in[ei] = true;
        }
        for &v in &path {
            vertex_in[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }

    // Consecutive triples (a, v, b) on a face mean b follows a in the rotation at v.
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for face in &faces {
        let len = face.len();
        for i in 0..len {
            let prev = face[(i + len - 1) % len];
            let v = face[i];
            let next = face[(i + 1) % len];
            succ[v].push((prev, next));
        }
    }
    let mut result = Vec::with_capacity(k);
    for v in 0..k {
        let start = adj[v]
            .iter()
            .map(|&(w, _)| w)
            .min()
            .expect("block vertex has neighbors");
        let mut rot = vec![start];
        let mut cur = start;
        loop {
            let next = succ[v]
                .iter()
                .find(|&&(p, _)| p == cur)
                .map(|&(_, n)| n)
                .ok_or(PlanarityError::NonPlanar)?;
            if next == start {
                break;
            }
            rot.push(next);
            cur = next;
            if rot.len() > adj[v].len() {
                return Err(PlanarityError::NonPlanar);
            }
        }
        if rot.len() != adj[v].len() {
            return Err(PlanarityError::NonPlanar);
        }
        result.push((verts[v], rot.into_iter().map(|w| verts[w]).collect()));
    }
    Ok(result)
}

/// Some cycle of a biconnected block, found by depth-first search from local vertex 0.
fn find_cycle(adj: &[Vec<(usize, usize)>]) -> Vec<usize> {
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut depth = vec![usize::MAX; k];
    depth[0] = 0;
    let mut stack = vec![(0usize, 0usize)];
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if *next < adj[v].len() {
            let (w, _) = adj[v][*next];
            *next += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("biconnected block without a cycle")
}

struct Fragment {
    /// Attachment vertices, sorted.
    attachments: Vec<usize>,
    /// Unembedded vertices of the fragment (empty for a chord).
    inner: Vec<usize>,
    /// The chord edge when `inner` is empty.
    chord: Option<(usize, usize)>,
}

fn fragments(adj: &[Vec<(usize, usize)>], vertex_in: &[bool], edge_in: &[bool]) -> Vec<Fragment> {
    let k = adj.len();
    let mut result = Vec::new();
    for v in 0..k {
        if !vertex_in[v] {
            continue;
        }
        for &(w, ei) in &adj[v] {
            if !edge_in[ei] && vertex_in[w] && v < w {
                result.push(Fragment {
                    attachments: vec![v, w],
                    inner: Vec::new(),
                    chord: Some((v, w)),
                });
            }
        }
    }
    let mut seen = vec![false; k];
    for start in 0..k {
        if vertex_in[start] || seen[start] {
            continue;
        }
        let mut inner = Vec::new();
        let mut attachments = BTreeSet::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            inner.push(x);
            for &(y, _) in &adj[x] {
                if vertex_in[y] {
                    attachments.insert(y);
                } else if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        inner.sort_unstable();
        result.push(Fragment {
            attachments: attachments.into_iter().collect(),
            inner,
            chord: None,
        });
    }
    result
}

/// A path through the fragment joining its two smallest attachments.
fn fragment_path(adj: &[Vec<(usize, usize)>], vertex_in: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let (src, dst) = (frag.attachments[0], frag.attachments[1]);
    let k = adj.len();
    let mut prev = vec![usize::MAX; k];
    let mut queue = VecDeque::new();
    for &(w, _) in &adj[src] {
        if !vertex_in[w] && frag.inner.binary_search(&w).is_ok() && prev[w] == usize::MAX {
            prev[w] = src;
            queue.push_back(w);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &adj[x] {
            if y == dst {
                let mut path = vec![dst, x];
                let mut cur = x;
                while prev[cur] != src {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.push(src);
                path.reverse();
                return path;
            }
            if !vertex_in[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment attachments are connected through the fragment")
}

/// Splits `face` by a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let x = path[0];
    let y = *path.last().expect("nonempty path");
    let len = face.len();
    let i = face.iter().position(|&v| v == x).expect("x on face");
    let j = face.iter().position(|&v| v == y).expect("y on face");
    let interior = &path[1..path.len() - 1];
    // x .. y along the face, then back to x through the path.
    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % len;
    }
    f1.extend(interior.iter().rev());
    // y .. x along the face, then forward through the path.
    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % len;
    }
    f2.extend(interior.iter());
    (f1, f2)
}
