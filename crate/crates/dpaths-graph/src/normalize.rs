//! Reduction of maximum-degree-3 instances to cubic instances.
//!
//! Rules are applied until none fires:
//! degree-0 and degree-1 vertices are resolved first, a terminal trapped
//! between opposite-set terminals on a degree-2 chain makes the instance
//! infeasible, degree-2 terminals are expanded into diamonds, and chains of
//! degree-2 nonterminals are contracted into single edges. The rotation
//! system is carried along so the result stays embedded.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use thiserror::Error;

use crate::embedding::PlanarEmbedding;
use crate::graph::{Edge, EdgeId, Graph, Instance, Role, VertexId};
use crate::planarity::planar_embed;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("instance has no solution: {reason}")]
    Infeasible { reason: String },
}

/// How a reduced instance relates to the original one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    /// Original optimum = reduced optimum + `length_offset`.
    pub length_offset: i64,
    /// For each reduced edge, the original edges it stands for.
    pub edge_map: Vec<Vec<EdgeId>>,
    /// Original edges that belong to every solution.
    pub removed_forced_paths: Vec<EdgeId>,
    pub diamonds: usize,
}

impl ReductionTrace {
    /// Maps a set of reduced edges to the corresponding original edge set (sorted).
    pub fn lift(&self, reduced_edges: &[EdgeId]) -> Vec<EdgeId> {
        let mut out: BTreeSet<EdgeId> = self.removed_forced_paths.iter().copied().collect();
        for &e in reduced_edges {
            out.extend(self.edge_map[e].iter().copied());
        }
        out.into_iter().collect()
    }
}

#[derive(Clone, Debug)]
pub struct Normalized {
    pub instance: Instance,
    pub embedding: PlanarEmbedding,
    pub trace: ReductionTrace,
}

#[derive(Clone, Debug)]
struct WorkEdge {
    u: VertexId,
    v: VertexId,
    length: u64,
    origin: Vec<EdgeId>,
    alive: bool,
}

impl WorkEdge {
    fn other(&self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

struct Work {
    role: Vec<Role>,
    alive: Vec<bool>,
    edges: Vec<WorkEdge>,
    /// Incident live edges of each vertex, in rotation order.
    rot: Vec<Vec<usize>>,
    trace: ReductionTrace,
}

enum Side {
    Open,
    Blocked,
}

impl Work {
    fn new(instance: &Instance, embedding: &PlanarEmbedding) -> Self {
        let g = &instance.graph;
        let edges: Vec<WorkEdge> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(id, e)| WorkEdge {
                u: e.u,
                v: e.v,
                length: e.length,
                origin: vec![id],
                alive: true,
            })
            .collect();
        let rot = (0..g.vertex_count())
            .map(|v| {
                embedding.rotation[v]
                    .iter()
                    .map(|&w| g.find_edge(v, w).expect("rotation matches graph"))
                    .collect()
            })
            .collect();
        Work {
            role: instance.roles(),
            alive: vec![true; g.vertex_count()],
            edges,
            rot,
            trace: ReductionTrace::default(),
        }
    }

    fn degree(&self, v: VertexId) -> usize {
        self.rot[v].len()
    }

    fn add_vertex(&mut self, role: Role) -> VertexId {
        self.role.push(role);
        self.alive.push(true);
        self.rot.push(Vec::new());
        self.role.len() - 1
    }

    fn add_edge(&mut self, u: VertexId, v: VertexId, length: u64, origin: Vec<EdgeId>) -> usize {
        self.edges.push(WorkEdge {
            u,
            v,
            length,
            origin,
            alive: true,
        });
        self.edges.len() - 1
    }

    fn remove_edge(&mut self, e: usize) {
        let (u, v) = (self.edges[e].u, self.edges[e].v);
        self.edges[e].alive = false;
        self.rot[u].retain(|&x| x != e);
        self.rot[v].retain(|&x| x != e);
    }

    fn remove_vertex(&mut self, v: VertexId) {
        for e in self.rot[v].clone() {
            self.remove_edge(e);
        }
        self.alive[v] = false;
        self.role[v] = Role::Free;
    }

    fn replace_in_rotation(&mut self, v: VertexId, old: usize, new: usize) {
        let slot = self.rot[v]
            .iter()
            .position(|&x| x == old)
            .expect("edge in rotation");
        self.rot[v][slot] = new;
    }

    fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.rot[a].iter().any(|&e| self.edges[e].other(a) == b)
    }

    fn force(&mut self, e: usize) {
        self.trace.length_offset += self.edges[e].length as i64;
        let origin = self.edges[e].origin.clone();
        self.trace.removed_forced_paths.extend(origin);
    }

    fn infeasible(reason: impl Into<String>) -> NormalizeError {
        NormalizeError::Infeasible {
            reason: reason.into(),
        }
    }

    /// Resolves vertices of degree at most one; returns whether anything changed.
    fn low_degree_pass(&mut self) -> Result<bool, NormalizeError> {
        let mut changed = false;
        for v in 0..self.alive.len() {
            if !self.alive[v] || self.degree(v) > 1 {
                continue;
            }
            changed = true;
            let role = self.role[v];
            if self.degree(v) == 0 {
                if role != Role::Free {
                    return Err(Self::infeasible(format!("terminal {v} is isolated")));
                }
                self.remove_vertex(v);
                continue;
            }
            if role == Role::Free {
                self.remove_vertex(v);
                continue;
            }
            let e = self.rot[v][0];
            let u = self.edges[e].other(v);
            match self.role[u] {
                Role::Free => {
                    self.force(e);
                    self.remove_vertex(v);
                    self.role[u] = role;
                }
                r if r == role => {
                    self.force(e);
                    self.remove_vertex(v);
                    self.remove_vertex(u);
                }
                _ => {
                    return Err(Self::infeasible(format!(
                        "degree-1 terminal {v} is only adjacent to opposite-set terminal {u}"
                    )))
                }
            }
        }
        Ok(changed)
    }

    fn walk_side(&self, t: VertexId, first_edge: usize) -> Side {
        let mut prev = t;
        let mut e = first_edge;
        loop {
            let w = self.edges[e].other(prev);
            if w == t {
                return Side::Blocked;
            }
            if self.role[w] != Role::Free {
                return if self.role[w] == self.role[t] {
                    Side::Open
                } else {
                    Side::Blocked
                };
            }
            if self.degree(w) != 2 {
                return Side::Open;
            }
            e = if self.rot[w][0] == e {
                self.rot[w][1]
            } else {
                self.rot[w][0]
            };
            prev = w;
        }
    }

    /// A degree-2 terminal whose chain ends at opposite-set terminals on both sides has no partner.
    fn check_trapped_terminals(&self) -> Result<(), NormalizeError> {
        for t in 0..self.alive.len() {
            if !self.alive[t] || self.role[t] == Role::Free || self.degree(t) != 2 {
                continue;
            }
            let left = self.walk_side(t, self.rot[t][0]);
            let right = self.walk_side(t, self.rot[t][1]);
            if matches!((left, right), (Side::Blocked, Side::Blocked)) {
                return Err(Self::infeasible(format!(
                    "terminal {t} is enclosed by terminals of the other set"
                )));
            }
        }
        Ok(())
    }

    /// Replaces every degree-2 terminal by a diamond.
    fn diamond_pass(&mut self) -> bool {
        let mut changed = false;
        for a in 0..self.alive.len() {
            if !self.alive[a] || self.role[a] == Role::Free || self.degree(a) != 2 {
                continue;
            }
            changed = true;
            let (e1, e2) = (self.rot[a][0], self.rot[a][1]);
            let u = self.edges[e1].other(a);
            let v = self.edges[e2].other(a);
            let x = self.add_vertex(Role::Free);
            let w = self.add_vertex(Role::Free);
            let y = self.add_vertex(Role::Free);
            let (l1, o1) = (self.edges[e1].length, self.edges[e1].origin.clone());
            let (l2, o2) = (self.edges[e2].length, self.edges[e2].origin.clone());
            let ux = self.add_edge(u, x, l1, o1);
            let xa = self.add_edge(x, a, 1, Vec::new());
            let xw = self.add_edge(x, w, 1, Vec::new());
            let ay = self.add_edge(a, y, 1, Vec::new());
            let aw = self.add_edge(a, w, 1, Vec::new());
            let wy = self.add_edge(w, y, 1, Vec::new());
            let yv = self.add_edge(y, v, l2, o2);
            self.replace_in_rotation(u, e1, ux);
            self.replace_in_rotation(v, e2, yv);
            self.edges[e1].alive = false;
            self.edges[e2].alive = false;
            self.rot[a] = vec![xa, aw, ay];
            self.rot[x] = vec![xa, ux, xw];
            self.rot[w] = vec![wy, aw, xw];
            self.rot[y] = vec![yv, ay, wy];
            self.trace.length_offset -= 1;
            self.trace.diamonds += 1;
        }
        changed
    }

    /// Contracts one maximal chain of degree-2 nonterminals; returns whether one was found.
    fn contract_one(&mut self) -> bool {
        let Some(start) = (0..self.alive.len())
            .find(|&v| self.alive[v] && self.role[v] == Role::Free && self.degree(v) == 2)
        else {
            return false;
        };
        let is_inner = |w: &Work, v: VertexId| w.role[v] == Role::Free && w.degree(v) == 2;
        // Walk in both directions from `start` collecting edges and interior vertices.
        let mut halves: Vec<(Vec<usize>, Vec<VertexId>, VertexId)> = Vec::new();
        for side in 0..2 {
            let mut edges = Vec::new();
            let mut inner = Vec::new();
            let mut prev = start;
            let mut e = self.rot[start][side];
            loop {
                edges.push(e);
                let w = self.edges[e].other(prev);
                if w == start {
                    // Closed chain: a cycle of nonterminals with no exit.
                    let mut cycle = inner;
                    cycle.push(start);
                    for v in cycle {
                        self.remove_vertex(v);
                    }
                    return true;
                }
                if !is_inner(self, w) {
                    halves.push((edges, inner, w));
                    break;
                }
                inner.push(w);
                e = if self.rot[w][0] == e {
                    self.rot[w][1]
                } else {
                    self.rot[w][0]
                };
                prev = w;
            }
        }
        let (right_edges, right_inner, v_end) = halves.pop().expect("two halves");
        let (left_edges, left_inner, u_end) = halves.pop().expect("two halves");
        // Path u_end .. start .. v_end as vertex and edge sequences.
        let mut verts: Vec<VertexId> = left_inner.into_iter().rev().collect();
        verts.push(start);
        verts.extend(right_inner);
        let mut path_edges: Vec<usize> = left_edges.into_iter().rev().collect();
        path_edges.extend(right_edges);

        if u_end == v_end {
            // A loop hanging off one vertex can never carry a path.
            for v in verts {
                self.remove_vertex(v);
            }
            return true;
        }
        let merged = |w: &Work, edges: &[usize]| -> (u64, Vec<EdgeId>) {
            let length = edges.iter().map(|&e| w.edges[e].length).sum();
            let mut origin: Vec<EdgeId> = edges
                .iter()
                .flat_map(|&e| w.edges[e].origin.iter().copied())
                .collect();
            origin.sort_unstable();
            (length, origin)
        };
        let first = path_edges[0];
        let last = *path_edges.last().expect("nonempty path");
        if !self.has_edge(u_end, v_end) {
            let (length, origin) = merged(self, &path_edges);
            let f = self.add_edge(u_end, v_end, length, origin);
            self.replace_in_rotation(u_end, first, f);
            self.replace_in_rotation(v_end, last, f);
            for v in verts {
                self.remove_vertex(v);
            }
            return true;
        }
        // An edge u_end v_end exists already: keep the first interior vertex and hang a stub on it.
        let keep = verts[0];
        let tail = &path_edges[1..];
        let g = if tail.len() == 1 {
            tail[0]
        } else {
            let (length, origin) = merged(self, tail);
            let g = self.add_edge(keep, v_end, length, origin);
            self.replace_in_rotation(v_end, last, g);
            for &v in &verts[1..] {
                self.remove_vertex(v);
            }
            g
        };
        let bridge = self.attach_stub(keep);
        self.rot[keep] = vec![first, g, bridge];
        true
    }

    /// Attaches a cubic pendant block to `anchor` through a new unit edge; returns that edge.
    fn attach_stub(&mut self, anchor: VertexId) -> usize {
        let (template, template_rot) = stub_template();
        let base = self.alive.len();
        for _ in 1..template.vertex_count() {
            self.add_vertex(Role::Free);
        }
        let id = |t: VertexId| if t == 0 { anchor } else { base + t - 1 };
        let mut edge_of = BTreeMap::new();
        let mut bridge = usize::MAX;
        for e in template.edges() {
            let we = self.add_edge(id(e.u), id(e.v), e.length, Vec::new());
            edge_of.insert(e.key(), we);
            if e.u == 0 {
                bridge = we;
            }
        }
        for t in 1..template.vertex_count() {
            self.rot[id(t)] = template_rot.rotation[t]
                .iter()
                .map(|&s| edge_of[&(t.min(s), t.max(s))])
                .collect();
        }
        bridge
    }

    fn finish(mut self) -> Normalized {
        let mut new_id = vec![usize::MAX; self.alive.len()];
        let mut count = 0;
        for v in 0..self.alive.len() {
            if self.alive[v] {
                new_id[v] = count;
                count += 1;
            }
        }
        let live: Vec<usize> = (0..self.edges.len())
            .filter(|&e| self.edges[e].alive)
            .collect();
        let graph = Graph::new(
            count,
            live.iter().map(|&e| {
                Edge::new(
                    new_id[self.edges[e].u],
                    new_id[self.edges[e].v],
                    self.edges[e].length,
                )
            }),
        )
        .expect("renumbered vertices are in range");
        let mut origin_by_key: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
        for &e in &live {
            let key = Edge::new(new_id[self.edges[e].u], new_id[self.edges[e].v], 0).key();
            origin_by_key.insert(key, std::mem::take(&mut self.edges[e].origin));
        }
        self.trace.edge_map = graph
            .edges()
            .iter()
            .map(|e| origin_by_key[&e.key()].clone())
            .collect();
        self.trace.removed_forced_paths.sort_unstable();
        let rotation = (0..self.alive.len())
            .filter(|&v| self.alive[v])
            .map(|v| {
                self.rot[v]
                    .iter()
                    .map(|&e| new_id[self.edges[e].other(v)])
                    .collect()
            })
            .collect();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for v in 0..self.alive.len() {
            if self.alive[v] {
                match self.role[v] {
                    Role::A => a.push(new_id[v]),
                    Role::B => b.push(new_id[v]),
                    Role::Free => {}
                }
            }
        }
        Normalized {
            instance: Instance::new(graph, a, b),
            embedding: PlanarEmbedding { rotation },
            trace: self.trace,
        }
    }
}

/// The pendant block: vertex 0 is the anchor, vertex 1 the attachment point,
/// vertices 2..=5 form a K4 whose edge 2-3 is subdivided by vertex 1.
fn stub_template() -> &'static (Graph, PlanarEmbedding) {
    static TEMPLATE: OnceLock<(Graph, PlanarEmbedding)> = OnceLock::new();
    TEMPLATE.get_or_init(|| {
        let g = Graph::from_triples(
            6,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (1, 3, 1),
                (2, 4, 1),
                (2, 5, 1),
                (3, 4, 1),
                (3, 5, 1),
                (4, 5, 1),
            ],
        )
        .expect("valid template");
        let emb = planar_embed(&g).expect("template is planar");
        (g, emb)
    })
}

/// Applies the reduction rules exhaustively.
pub fn normalize_to_cubic(
    instance: &Instance,
    embedding: &PlanarEmbedding,
) -> Result<Normalized, NormalizeError> {
    let mut work = Work::new(instance, embedding);
    loop {
        if work.low_degree_pass()? {
            continue;
        }
        work.check_trapped_terminals()?;
        if work.diamond_pass() {
            continue;
        }
        if work.contract_one() {
            continue;
        }
        break;
    }
    Ok(work.finish())
}

/// One connected piece of an embedded instance.
#[derive(Clone, Debug)]
pub struct Component {
    pub instance: Instance,
    pub embedding: PlanarEmbedding,
    /// Parent edge id of each component edge.
    pub edge_ids: Vec<EdgeId>,
}

/// Splits into connected components; components without terminals are dropped.
pub fn split_components(
    instance: &Instance,
    embedding: &PlanarEmbedding,
) -> Result<Vec<Component>, NormalizeError> {
    let g = &instance.graph;
    let (comp, count) = g.components();
    let roles = instance.roles();
    let mut result = Vec::new();
    for c in 0..count {
        let verts: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| comp[v] == c).collect();
        let a_count = verts.iter().filter(|&&v| roles[v] == Role::A).count();
        let b_count = verts.iter().filter(|&&v| roles[v] == Role::B).count();
        if a_count % 2 == 1 || b_count % 2 == 1 {
            return Err(NormalizeError::Infeasible {
                reason: format!(
                    "a connected component holds {a_count} A-terminals and {b_count} B-terminals"
                ),
            });
        }
        if a_count + b_count == 0 {
            continue;
        }
        let mut new_id = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in verts.iter().enumerate() {
            new_id[v] = i;
        }
        let edge_ids: Vec<EdgeId> = (0..g.edge_count())
            .filter(|&e| comp[g.edge(e).u] == c)
            .collect();
        let graph = Graph::new(
            verts.len(),
            edge_ids.iter().map(|&e| {
                let ed = g.edge(e);
                Edge::new(new_id[ed.u], new_id[ed.v], ed.length)
            }),
        )
        .expect("component vertices in range");
        // Edge order is preserved because relabeling is monotone.
        let keep: Vec<bool> = (0..g.vertex_count()).map(|v| comp[v] == c).collect();
        let sub = Instance::new(
            graph,
            verts
                .iter()
                .filter(|&&v| roles[v] == Role::A)
                .map(|&v| new_id[v]),
            verts
                .iter()
                .filter(|&&v| roles[v] == Role::B)
                .map(|&v| new_id[v]),
        );
        result.push(Component {
            instance: sub,
            embedding: embedding.restrict(&keep, &new_id),
            edge_ids,
        });
    }
    Ok(result)
}
