//! Dense skew-symmetric matrices.

use dpaths_graph::Graph;
use num_traits::{One, Zero};
use std::ops::Neg;

use crate::orientation::Orientation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Clone + Zero + Neg<Output = T>> SkewMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        SkewMatrix {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.dim + c]
    }

    /// Sets `M[r][c] = value` and `M[c][r] = -value`.
    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.entries[c * self.dim + r] = -value.clone();
        self.entries[r * self.dim + c] = value;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn is_skew(&self) -> bool
    where
        T: PartialEq,
    {
        (0..self.dim).all(|r| (0..self.dim).all(|c| *self.get(r, c) == -self.get(c, r).clone()))
    }
}

/// Signed adjacency matrix with entry magnitude `s^length` per edge.
pub fn build_skew_matrix<T>(graph: &Graph, orientation: &Orientation, s: u64) -> SkewMatrix<T>
where
    T: Clone + Zero + One + Neg<Output = T> + From<u64>,
{
    let mut m = SkewMatrix::zeros(graph.vertex_count());
    let base = T::from(s);
    for (e, edge) in graph.edges().iter().enumerate() {
        let weight = num_traits::pow(base.clone(), edge.length as usize);
        if orientation.forward[e] {
            m.set(edge.u, edge.v, weight);
        } else {
            m.set(edge.v, edge.u, weight);
        }
    }
    m
}
