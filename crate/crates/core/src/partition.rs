//! Flat, disjoint, complete clusterings and the per-cluster tallies every
//! metric is built from.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Assignment of every vertex to exactly one non-empty cluster `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates `assignment` against `g` and compacts away unused labels.
    pub fn from_assignment(g: &Graph, assignment: &[usize]) -> Result<Self> {
        if assignment.len() != g.vertex_count() {
            return Err(Error::InvalidAssignment {
                expected: g.vertex_count(),
                found: assignment.len(),
            });
        }
        Ok(Self::from_labels(assignment.to_vec()))
    }

    /// Builds a partition from raw per-vertex labels. Labels are compacted
    /// to `0..k` keeping their relative order, so `[5, 2, 5]` becomes
    /// `[1, 0, 1]`.
    pub fn from_labels(mut assignment: Vec<usize>) -> Self {
        let mut used: Vec<usize> = assignment.clone();
        used.sort_unstable();
        used.dedup();
        let mut members = vec![Vec::new(); used.len()];
        for (v, label) in assignment.iter_mut().enumerate() {
            *label = used.binary_search(label).expect("label collected above");
            members[*label].push(v);
        }
        Partition {
            assignment,
            members,
        }
    }

    /// Every vertex in one cluster.
    pub fn single(vertex_count: usize) -> Self {
        Self::from_labels(vec![0; vertex_count])
    }

    /// Every vertex in its own cluster.
    pub fn singletons(vertex_count: usize) -> Self {
        Self::from_labels((0..vertex_count).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn cluster_count(&self) -> usize {
        self.members.len()
    }

    pub fn cluster_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Sorted vertex ids of cluster `c`.
    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn clusters(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.members.iter().map(Vec::as_slice)
    }

    /// Labels renumbered by first appearance; two partitions group vertices
    /// identically iff their canonical forms are equal.
    pub fn canonical(&self) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.cluster_count()];
        let mut next = 0;
        self.assignment
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect()
    }

    pub fn same_grouping(&self, other: &Partition) -> bool {
        self.vertex_count() == other.vertex_count() && self.canonical() == other.canonical()
    }

    /// Whether every cluster of `self` lies inside a single cluster of
    /// `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.vertex_count() == coarser.vertex_count()
            && self.members.iter().all(|cluster| {
                let target = coarser.cluster_of(cluster[0]);
                cluster.iter().all(|&v| coarser.cluster_of(v) == target)
            })
    }
}

/// Tallies for one cluster `C` of a graph `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClusterStats {
    /// `|V_c|`
    pub size: usize,
    /// Edges with both endpoints in the cluster, `|E_c|`.
    pub internal_edges: usize,
    /// Degree sum of the induced subgraph, `D(C) = 2·|E_c|`.
    pub internal_degree: usize,
    /// Full-graph degree sum of the cluster's vertices (its volume).
    pub graph_degree: usize,
    /// Edge endpoints leaving the cluster, `graph_degree − internal_degree`.
    pub cut: usize,
}

impl ClusterStats {
    fn finish(size: usize, internal_edges: usize, graph_degree: usize) -> Self {
        ClusterStats {
            size,
            internal_edges,
            internal_degree: 2 * internal_edges,
            graph_degree,
            cut: graph_degree - 2 * internal_edges,
        }
    }
}

fn check_cover(g: &Graph, p: &Partition) -> Result<()> {
    if p.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidAssignment {
            expected: g.vertex_count(),
            found: p.vertex_count(),
        });
    }
    Ok(())
}

/// Tallies for cluster `c` of `p`.
pub fn cluster_stats(g: &Graph, p: &Partition, c: usize) -> Result<ClusterStats> {
    check_cover(g, p)?;
    if c >= p.cluster_count() {
        return Err(Error::ClusterOutOfRange {
            cluster: c,
            cluster_count: p.cluster_count(),
        });
    }
    let members = p.members(c);
    let mut internal_endpoints = 0;
    for &u in members {
        internal_endpoints += g.neighbors(u).iter().filter(|&&v| p.cluster_of(v) == c).count();
    }
    Ok(ClusterStats::finish(
        members.len(),
        internal_endpoints / 2,
        g.degree_sum_over(members)?,
    ))
}

/// Tallies for every cluster of `p`, in one pass over the edges.
pub fn all_cluster_stats(g: &Graph, p: &Partition) -> Result<Vec<ClusterStats>> {
    check_cover(g, p)?;
    let k = p.cluster_count();
    let mut internal = vec![0usize; k];
    let mut volume = vec![0usize; k];
    for v in 0..g.vertex_count() {
        volume[p.cluster_of(v)] += g.degree(v);
    }
    for (u, v) in g.edges() {
        let c = p.cluster_of(u);
        if c == p.cluster_of(v) {
            internal[c] += 1;
        }
    }
    Ok((0..k)
        .map(|c| ClusterStats::finish(p.members(c).len(), internal[c], volume[c]))
        .collect())
}
