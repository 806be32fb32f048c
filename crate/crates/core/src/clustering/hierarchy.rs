//! Agglomerative clustering of adjacency rows and max-cluster tree cuts.

use alloc::vec;
use alloc::vec::Vec;

use super::distance::RowDistances;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// Inter-cluster distance used when agglomerating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Linkage {
    /// Minimum pairwise point distance.
    #[default]
    Single,
    /// Maximum pairwise point distance.
    Complete,
    /// Unweighted mean pairwise point distance (UPGMA).
    Average,
}

/// One agglomeration step. Node ids below `leaf_count` are vertices; node
/// `leaf_count + i` is the cluster created by merge `i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Merge {
    pub left: usize,
    pub right: usize,
    pub distance: f64,
    /// Number of leaves under the new node.
    pub size: usize,
}

/// A full merge tree over `leaf_count` leaves, merges in non-decreasing
/// distance order.
#[derive(Debug, Clone, PartialEq)]
pub struct Dendrogram {
    leaf_count: usize,
    merges: Vec<Merge>,
}

impl Dendrogram {
    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        let (keep, gone) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[gone] = keep;
        keep
    }
}

/// Turns leaf-level merges `(a, b, d)` into a dendrogram. Merges are ordered
/// by distance, ties by the lower then higher leaf id.
fn assemble(leaf_count: usize, mut raw: Vec<(usize, usize, f64)>) -> Dendrogram {
    for m in &mut raw {
        if m.0 > m.1 {
            core::mem::swap(&mut m.0, &mut m.1);
        }
    }
    raw.sort_by(|x, y| {
        x.2.total_cmp(&y.2)
            .then(x.0.cmp(&y.0))
            .then(x.1.cmp(&y.1))
    });
    let mut sets = DisjointSet::new(leaf_count);
    // node id and size of the cluster rooted at each set representative
    let mut node: Vec<usize> = (0..leaf_count).collect();
    let mut size = vec![1usize; leaf_count];
    let merges = raw
        .into_iter()
        .enumerate()
        .map(|(i, (a, b, distance))| {
            let (ra, rb) = (sets.find(a), sets.find(b));
            let (na, nb) = (node[ra], node[rb]);
            let merged = size[ra] + size[rb];
            let root = sets.union(ra, rb);
            node[root] = leaf_count + i;
            size[root] = merged;
            Merge {
                left: na.min(nb),
                right: na.max(nb),
                distance,
                size: merged,
            }
        })
        .collect();
    Dendrogram { leaf_count, merges }
}

/// Agglomerates the vertices of `g`, treating each as the point given by its
/// 0/1 adjacency row under Euclidean distance.
pub fn linkage(g: &Graph, method: Linkage) -> Dendrogram {
    match method {
        Linkage::Single => single_linkage(g),
        Linkage::Complete | Linkage::Average => nn_chain(g, method),
    }
}

/// Single linkage via a minimum spanning tree of the complete row-distance
/// graph (Prim, `O(n²)` time, `O(n)` extra space).
pub fn linkage_single(g: &Graph) -> Dendrogram {
    single_linkage(g)
}

fn single_linkage(g: &Graph) -> Dendrogram {
    let n = g.vertex_count();
    if n == 0 {
        return Dendrogram {
            leaf_count: 0,
            merges: Vec::new(),
        };
    }
    let mut rows = RowDistances::new(n);
    let mut row = vec![0usize; n];
    let mut in_tree = vec![false; n];
    let mut best = vec![usize::MAX; n];
    let mut via = vec![0usize; n];
    let mut edges = Vec::with_capacity(n - 1);

    let mut current = 0;
    in_tree[0] = true;
    for _ in 1..n {
        rows.fill(g, current, &mut row);
        let mut next = usize::MAX;
        for v in 0..n {
            if in_tree[v] {
                continue;
            }
            if row[v] < best[v] {
                best[v] = row[v];
                via[v] = current;
            }
            if next == usize::MAX || best[v] < best[next] {
                next = v;
            }
        }
        in_tree[next] = true;
        edges.push((via[next], next, libm::sqrt(best[next] as f64)));
        current = next;
    }
    assemble(n, edges)
}

fn condensed_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    n * i - i * (i + 1) / 2 + j - i - 1
}

/// Nearest-neighbor-chain agglomeration for reducible linkages, over a
/// condensed `n(n−1)/2` distance matrix.
fn nn_chain(g: &Graph, method: Linkage) -> Dendrogram {
    let n = g.vertex_count();
    let mut dist = vec![0.0f64; n * n.saturating_sub(1) / 2];
    let mut rows = RowDistances::new(n);
    let mut row = vec![0usize; n];
    for u in 0..n {
        rows.fill(g, u, &mut row);
        for v in u + 1..n {
            dist[condensed_index(n, u, v)] = libm::sqrt(row[v] as f64);
        }
    }

    let mut active = vec![true; n];
    let mut size = vec![1usize; n];
    let mut chain: Vec<usize> = Vec::with_capacity(n);
    let mut raw = Vec::with_capacity(n.saturating_sub(1));

    while raw.len() + 1 < n {
        if chain.is_empty() {
            chain.push(active.iter().position(|&a| a).expect("two clusters remain"));
        }
        let (a, b, d) = loop {
            let a = *chain.last().unwrap();
            let prev = chain.len().checked_sub(2).map(|i| chain[i]);
            let mut nearest = prev;
            let mut nearest_d = prev.map_or(f64::INFINITY, |p| dist[condensed_index(n, a, p)]);
            for c in 0..n {
                if c == a || !active[c] {
                    continue;
                }
                let d = dist[condensed_index(n, a, c)];
                if d < nearest_d {
                    nearest = Some(c);
                    nearest_d = d;
                }
            }
            let b = nearest.expect("two clusters remain");
            if Some(b) == prev {
                chain.pop();
                chain.pop();
                break (a, b, nearest_d);
            }
            chain.push(b);
        };

        let (keep, gone) = (a.min(b), a.max(b));
        raw.push((keep, gone, d));
        for c in 0..n {
            if !active[c] || c == keep || c == gone {
                continue;
            }
            let dk = dist[condensed_index(n, c, keep)];
            let dg = dist[condensed_index(n, c, gone)];
            dist[condensed_index(n, c, keep)] = match method {
                Linkage::Complete => dk.max(dg),
                Linkage::Average => {
                    let (sk, sg) = (size[keep] as f64, size[gone] as f64);
                    (sk * dk + sg * dg) / (sk + sg)
                }
                Linkage::Single => dk.min(dg),
            };
        }
        active[gone] = false;
        size[keep] += size[gone];
    }
    assemble(n, raw)
}

/// Flat clustering with at most `k` clusters, cut at the smallest merge
/// distance that achieves it. Merges tied at that distance are all applied,
/// so fewer than `k` clusters can come back.
pub fn cut_maxclust(d: &Dendrogram, k: usize) -> Result<Partition> {
    let n = d.leaf_count;
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, max: n });
    }
    let applied = if k == n {
        0
    } else {
        let threshold = d.merges[n - k - 1].distance;
        d.merges.partition_point(|m| m.distance <= threshold)
    };

    let mut sets = DisjointSet::new(n);
    let mut leaf_of: Vec<usize> = (0..n).collect();
    for (i, m) in d.merges[..applied].iter().enumerate() {
        let (a, b) = (leaf_of[m.left], leaf_of[m.right]);
        sets.union(a, b);
        leaf_of.push(a);
        debug_assert_eq!(leaf_of.len(), n + i + 1);
    }
    let labels = (0..n).map(|v| sets.find(v)).collect();
    Ok(Partition::from_labels(labels))
}

/// Linkage followed by a max-cluster cut.
pub fn hierarchical(g: &Graph, method: Linkage, k: usize) -> Result<Partition> {
    cut_maxclust(&linkage(g, method), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn single_vertex_and_k_bounds() {
        let g = Graph::empty(1);
        let d = linkage_single(&g);
        assert!(d.merges().is_empty());
        assert_eq!(cut_maxclust(&d, 1).unwrap().cluster_count(), 1);
        assert_eq!(cut_maxclust(&d, 2), Err(Error::KOutOfRange { k: 2, max: 1 }));
        assert_eq!(cut_maxclust(&d, 0), Err(Error::KOutOfRange { k: 0, max: 1 }));
    }

    #[test]
    fn complete_graph_ties_collapse() {
        let g = generators::complete(6).unwrap();
        for method in [Linkage::Single, Linkage::Complete, Linkage::Average] {
            let d = linkage(&g, method);
            assert_eq!(d.merges().len(), 5);
            assert!(d.merges().iter().all(|m| (m.distance - 2f64.sqrt()).abs() < 1e-12));
            for k in 1..6 {
                assert_eq!(cut_maxclust(&d, k).unwrap().cluster_count(), 1);
            }
            assert_eq!(cut_maxclust(&d, 6).unwrap().cluster_count(), 6);
        }
    }

    #[test]
    fn merge_sizes_and_node_ids() {
        let g = generators::disjoint_cliques(&[3, 3]);
        let d = linkage_single(&g);
        assert_eq!(d.merges().last().unwrap().size, 6);
        for (i, m) in d.merges().iter().enumerate() {
            assert!(m.left < m.right && m.right < 6 + i);
        }
    }
}
