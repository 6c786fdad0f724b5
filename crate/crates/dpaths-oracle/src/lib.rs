//! Exhaustive reference implementations used as ground truth in tests.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::ops::{Add, Mul};

use dpaths_graph::{EdgeId, Graph, Instance, Role, VertexId};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

pub const DEFAULT_VERTEX_CAP: usize = 16;
pub const DEFAULT_MIS_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {vertices} vertices, above the cap of {cap}")]
    InstanceTooLarge { vertices: usize, cap: usize },
}

fn check_cap(vertices: usize, cap: usize) -> Result<(), OracleError> {
    if vertices > cap {
        Err(OracleError::InstanceTooLarge { vertices, cap })
    } else {
        Ok(())
    }
}

/// Minimum length and every optimal solution, each a sorted list of edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub min_length: Option<u64>,
    pub solutions: Vec<Vec<EdgeId>>,
}

impl SolutionSet {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }
}

/// Lexicographic order on characteristic vectors over edge ids, absent before present.
pub fn canonical_cmp(x: &[EdgeId], y: &[EdgeId]) -> Ordering {
    let xs: BTreeSet<EdgeId> = x.iter().copied().collect();
    let ys: BTreeSet<EdgeId> = y.iter().copied().collect();
    match xs.symmetric_difference(&ys).next() {
        None => Ordering::Equal,
        Some(first) if ys.contains(first) => Ordering::Less,
        Some(_) => Ordering::Greater,
    }
}

struct PathSearch<'a> {
    graph: &'a Graph,
    roles: Vec<Role>,
    used: Vec<bool>,
    matched: Vec<bool>,
    terminals: Vec<VertexId>,
    chosen: Vec<EdgeId>,
    length: u64,
    best: Option<u64>,
    found: BTreeSet<Vec<EdgeId>>,
}

impl PathSearch<'_> {
    fn next_terminal(&mut self) {
        let Some(&t) = self.terminals.iter().find(|&&t| !self.matched[t]) else {
            self.record();
            return;
        };
        self.matched[t] = true;
        self.used[t] = true;
        self.extend(t, t);
        self.used[t] = false;
        self.matched[t] = false;
    }

    fn record(&mut self) {
        match self.best {
            Some(b) if self.length > b => {}
            Some(b) if self.length == b => {
                let mut s = self.chosen.clone();
                s.sort_unstable();
                self.found.insert(s);
            }
            _ => {
                self.best = Some(self.length);
                self.found.clear();
                let mut s = self.chosen.clone();
                s.sort_unstable();
                self.found.insert(s);
            }
        }
    }

    /// Extends the current path from `start`, whose last vertex is `at`.
    fn extend(&mut self, start: VertexId, at: VertexId) {
        for &e in self.graph.incident_edges(at) {
            let w = self.graph.edge(e).other(at);
            if self.used[w] {
                continue;
            }
            let len = self.graph.edge(e).length;
            if matches!(self.best, Some(b) if self.length + len > b) {
                continue;
            }
            self.chosen.push(e);
            self.length += len;
            self.used[w] = true;
            if self.roles[w] == Role::Free {
                self.extend(start, w);
            } else if self.roles[w] == self.roles[start] && !self.matched[w] {
                self.matched[w] = true;
                self.next_terminal();
                self.matched[w] = false;
            }
            self.used[w] = false;
            self.length -= len;
            self.chosen.pop();
        }
    }
}

/// Exhaustive search over terminal pairings and vertex-disjoint path systems.
pub fn enumerate_solutions(instance: &Instance, cap: usize) -> Result<SolutionSet, OracleError> {
    let g = &instance.graph;
    check_cap(g.vertex_count(), cap)?;
    let mut search = PathSearch {
        graph: g,
        roles: instance.roles(),
        used: vec![false; g.vertex_count()],
        matched: vec![false; g.vertex_count()],
        terminals: instance.terminals(),
        chosen: Vec::new(),
        length: 0,
        best: None,
        found: BTreeSet::new(),
    };
    search.next_terminal();
    let mut solutions: Vec<Vec<EdgeId>> = search.found.into_iter().collect();
    solutions.sort_by(|x, y| canonical_cmp(x, y));
    Ok(SolutionSet {
        min_length: search.best,
        solutions,
    })
}

/// Weighted perfect-matching sum by matching the lowest unmatched vertex in every possible way.
pub fn count_pm_brute<T>(
    vertex_count: usize,
    edges: &[(VertexId, VertexId, T)],
    cap: usize,
) -> Result<T, OracleError>
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
{
    check_cap(vertex_count, cap)?;
    if vertex_count % 2 == 1 {
        return Ok(T::zero());
    }
    let mut adj: Vec<Vec<(VertexId, T)>> = vec![Vec::new(); vertex_count];
    for (u, v, w) in edges {
        if u != v {
            adj[*u].push((*v, w.clone()));
            adj[*v].push((*u, w.clone()));
        }
    }
    fn go<T>(adj: &[Vec<(VertexId, T)>], matched: &mut [bool]) -> T
    where
        T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
    {
        let Some(v) = matched.iter().position(|&m| !m) else {
            return T::one();
        };
        matched[v] = true;
        let mut total = T::zero();
        for (w, weight) in &adj[v] {
            if !matched[*w] {
                matched[*w] = true;
                total = total + weight.clone() * go(adj, matched);
                matched[*w] = false;
            }
        }
        matched[v] = false;
        total
    }
    Ok(go(&adj, &mut vec![false; vertex_count]))
}

/// Perfect-matching sum of `graph` with each edge weighted `s^length`.
pub fn count_pm_graph(graph: &Graph, s: u64, cap: usize) -> Result<BigUint, OracleError> {
    let edges: Vec<(VertexId, VertexId, BigUint)> = graph
        .edges()
        .iter()
        .map(|e| (e.u, e.v, BigUint::from(s).pow(e.length as u32)))
        .collect();
    count_pm_brute(graph.vertex_count(), &edges, cap)
}

/// Maximum independent set size and the number of maximum independent sets.
pub fn max_independent_sets(graph: &Graph, cap: usize) -> Result<(usize, BigUint), OracleError> {
    let n = graph.vertex_count();
    check_cap(n, cap.min(63))?;
    let closed: Vec<u64> = (0..n)
        .map(|v| {
            graph
                .neighbors(v)
                .fold(1u64 << v, |acc, w| acc | (1u64 << w))
        })
        .collect();
    fn go(remaining: u64, closed: &[u64]) -> (usize, BigUint) {
        if remaining == 0 {
            return (0, BigUint::one());
        }
        let v = remaining.trailing_zeros() as usize;
        let (skip_size, skip_count) = go(remaining & !(1u64 << v), closed);
        let (take_size, take_count) = go(remaining & !closed[v], closed);
        let take_size = take_size + 1;
        match take_size.cmp(&skip_size) {
            Ordering::Greater => (take_size, take_count),
            Ordering::Less => (skip_size, skip_count),
            Ordering::Equal => (take_size, take_count + skip_count),
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(go(all, &closed))
}
