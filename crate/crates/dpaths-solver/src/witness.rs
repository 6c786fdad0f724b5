//! Witness extraction and uniform sampling by self-reduction.
//!
//! Solutions are ordered by their characteristic vectors over the edge list
//! (edges sorted by endpoints, absent before present). Decisions are encoded
//! in the lengths: an excluded edge gets one unit longer and an included edge
//! one unit shorter, so exactly the optimal solutions that respect all
//! decisions reach the target `optimum - |included|`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use dpaths_graph::{EdgeId, Instance, Role, VertexId};
use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::prepare::{prepare_with_lengths, Prepared};
use crate::solve::{solve_prepared, SolveOptions};
use crate::SolveError;

/// Total length if `edges` form a valid disjoint A,B-path system of `instance`.
pub fn path_system_length(instance: &Instance, edges: &[EdgeId]) -> Option<u64> {
    let g = &instance.graph;
    let roles = instance.roles();
    let mut adjacent: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != edges.len() || sorted.iter().any(|&e| e >= g.edge_count()) {
        return None;
    }
    for &e in &sorted {
        let ed = g.edge(e);
        adjacent.entry(ed.u).or_default().push(ed.v);
        adjacent.entry(ed.v).or_default().push(ed.u);
    }
    for v in 0..g.vertex_count() {
        let d = adjacent.get(&v).map_or(0, Vec::len);
        let ok = match roles[v] {
            Role::Free => d == 0 || d == 2,
            _ => d == 1,
        };
        if !ok {
            return None;
        }
    }
    let mut visited = vec![false; g.vertex_count()];
    let mut walked = 0;
    for &start in instance.terminals().iter() {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let (mut prev, mut at) = (start, adjacent[&start][0]);
        walked += 1;
        while roles[at] == Role::Free {
            visited[at] = true;
            let next = *adjacent[&at].iter().find(|&&w| w != prev)?;
            prev = at;
            at = next;
            walked += 1;
        }
        if visited[at] || roles[at] != roles[start] {
            return None;
        }
        visited[at] = true;
    }
    if walked != sorted.len() {
        return None;
    }
    Some(sorted.iter().map(|&e| g.edge(e).length).sum())
}

/// Counts optimal solutions under prefix decisions, caching every count it computes.
pub struct SolutionIndex<'a> {
    prepared: &'a Prepared,
    options: &'a SolveOptions,
    base: Vec<u64>,
    optimum: u64,
    total: BigUint,
    cache: RefCell<HashMap<(EdgeId, Vec<EdgeId>), BigUint>>,
}

impl<'a> SolutionIndex<'a> {
    pub fn new(prepared: &'a Prepared, options: &'a SolveOptions) -> Result<Self, SolveError> {
        let report = solve_prepared(prepared, options)?;
        Ok(SolutionIndex {
            prepared,
            options,
            base: prepared
                .instance
                .graph
                .edges()
                .iter()
                .map(|e| e.length)
                .collect(),
            optimum: report.summary.length.unwrap_or(0),
            total: report.summary.count,
            cache: RefCell::new(HashMap::new()),
        })
    }

    /// Number of optimal solutions.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// Optimal solutions that contain `present`, avoid every other edge below `next`, and avoid `next` itself.
    fn count_without(&self, next: EdgeId, present: &[EdgeId]) -> Result<BigUint, SolveError> {
        let key = (next, present.to_vec());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let mut lengths = self.base.clone();
        for e in 0..=next {
            lengths[e] += 1;
        }
        for &e in present {
            lengths[e] -= 2;
        }
        let target = self.optimum - present.len() as u64;
        let report = solve_prepared(
            &prepare_with_lengths(self.prepared, &lengths)?,
            self.options,
        )?;
        let count = match report.summary.length {
            Some(l) if l == target => report.summary.count,
            Some(l) if l < target => {
                return Err(SolveError::InternalInconsistency(format!(
                    "constrained optimum {l} is below the target {target}"
                )))
            }
            _ => BigUint::zero(),
        };
        self.cache.borrow_mut().insert(key, count.clone());
        Ok(count)
    }

    fn is_complete(&self, present: &[EdgeId]) -> bool {
        path_system_length(&self.prepared.instance, present) == Some(self.optimum)
    }

    /// The `index`-th optimal solution (1-based) in canonical order.
    pub fn witness(&self, index: &BigUint) -> Result<Vec<EdgeId>, SolveError> {
        if index.is_zero() || *index > self.total {
            return Err(SolveError::IndexOutOfRange {
                index: index.clone(),
                count: self.total.clone(),
            });
        }
        let mut rank = index.clone();
        let mut present = Vec::new();
        for e in 0..self.base.len() {
            if self.is_complete(&present) {
                break;
            }
            let without = self.count_without(e, &present)?;
            if rank > without {
                rank -= without;
                present.push(e);
            }
        }
        if !self.is_complete(&present) || !rank.is_one() {
            return Err(SolveError::InternalInconsistency(
                "self-reduction did not end at a solution".into(),
            ));
        }
        Ok(present)
    }

    /// A uniformly random optimal solution, deterministic in `seed`.
    pub fn sample(&self, seed: u64) -> Result<Vec<EdgeId>, SolveError> {
        if self.total.is_zero() {
            return Err(SolveError::Infeasible);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let index = rng.gen_biguint_below(&self.total) + 1u32;
        self.witness(&index)
    }

    /// Every optimal solution in canonical order.
    pub fn enumerate(&self) -> Result<Vec<Vec<EdgeId>>, SolveError> {
        let mut out = Vec::new();
        self.descend(0, &mut Vec::new(), self.total.clone(), &mut out)?;
        Ok(out)
    }

    fn descend(
        &self,
        next: EdgeId,
        present: &mut Vec<EdgeId>,
        here: BigUint,
        out: &mut Vec<Vec<EdgeId>>,
    ) -> Result<(), SolveError> {
        if here.is_zero() {
            return Ok(());
        }
        if self.is_complete(present) {
            if !here.is_one() {
                return Err(SolveError::InternalInconsistency(
                    "a complete solution has extensions".into(),
                ));
            }
            out.push(present.clone());
            return Ok(());
        }
        if next == self.base.len() {
            return Err(SolveError::InternalInconsistency(
                "decisions exhausted before a solution".into(),
            ));
        }
        let without = self.count_without(next, present)?;
        if here < without {
            return Err(SolveError::InternalInconsistency(
                "branch count exceeds its parent".into(),
            ));
        }
        self.descend(next + 1, present, without.clone(), out)?;
        present.push(next);
        self.descend(next + 1, present, here - without, out)?;
        present.pop();
        Ok(())
    }
}

/// The `index`-th optimal solution (1-based) in canonical order.
pub fn witness(
    prepared: &Prepared,
    options: &SolveOptions,
    index: &BigUint,
) -> Result<Vec<EdgeId>, SolveError> {
    SolutionIndex::new(prepared, options)?.witness(index)
}

/// Every optimal solution in canonical order.
pub fn enumerate_witnesses(
    prepared: &Prepared,
    options: &SolveOptions,
) -> Result<Vec<Vec<EdgeId>>, SolveError> {
    SolutionIndex::new(prepared, options)?.enumerate()
}

/// A uniformly random optimal solution, deterministic in `seed`.
pub fn sample(
    prepared: &Prepared,
    options: &SolveOptions,
    seed: u64,
) -> Result<Vec<EdgeId>, SolveError> {
    SolutionIndex::new(prepared, options)?.sample(seed)
}
