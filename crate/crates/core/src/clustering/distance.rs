//! Euclidean distances between adjacency-matrix rows without materializing
//! the matrix.
//!
//! For 0/1 rows with a zero diagonal, `‖r_u − r_v‖² = deg(u) + deg(v) −
//! 2·|N(u) ∩ N(v)|`. Positions `u` and `v` need no correction: when `u ~ v`
//! the two mismatched entries are already counted once in each degree and
//! contribute nothing to the overlap.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Squared row distance between two vertices via a sorted-list merge.
pub fn row_distance_sq(g: &Graph, u: usize, v: usize) -> usize {
    g.degree(u) + g.degree(v) - 2 * common_neighbors(g.neighbors(u), g.neighbors(v))
}

fn common_neighbors(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Scratch space for computing one vertex's squared distances to all
/// others in `O(n + Σ_{w ∈ N(u)} deg(w))`.
#[derive(Debug)]
pub struct RowDistances {
    common: Vec<usize>,
    touched: Vec<usize>,
}

impl RowDistances {
    pub fn new(vertex_count: usize) -> Self {
        RowDistances {
            common: vec![0; vertex_count],
            touched: Vec::new(),
        }
    }

    /// Writes `‖r_u − r_v‖²` into `out[v]` for every `v`.
    pub fn fill(&mut self, g: &Graph, u: usize, out: &mut [usize]) {
        for &w in g.neighbors(u) {
            for &v in g.neighbors(w) {
                if self.common[v] == 0 {
                    self.touched.push(v);
                }
                self.common[v] += 1;
            }
        }
        let du = g.degree(u);
        for (v, slot) in out.iter_mut().enumerate() {
            *slot = du + g.degree(v);
        }
        for v in self.touched.drain(..) {
            out[v] -= 2 * self.common[v];
            self.common[v] = 0;
        }
    }
}
