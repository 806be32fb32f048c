//! Clustering quality measures.
//!
//! All metrics share the per-cluster tallies from
//! [`all_cluster_stats`](crate::partition::all_cluster_stats). On an edgeless
//! graph every graph-based metric is defined as 0.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{all_cluster_stats, ClusterStats, Partition};

/// All metric values for one (graph, partition) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    /// Number of clusters in the scored partition.
    pub cluster_count: usize,
    pub nedindex: f64,
    pub modularity: f64,
    /// Present only when a reference partition was supplied.
    pub nmi: Option<f64>,
    /// Unweighted mean of `per_cluster_conductance`.
    pub conductance: f64,
    pub per_cluster_ned: Vec<f64>,
    pub per_cluster_conductance: Vec<f64>,
}

fn pairs(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Node-edge-degree score of one cluster:
///
/// ```text
///        |V_c| + |E_c| + D(C)
/// NED = ───────────────────────────────
///       |V_c| + C(|V_c|, 2) + D(G, V_c)
/// ```
///
/// Lies in `(0, 1]` since `|E_c| ≤ C(|V_c|, 2)` and `D(C) ≤ D(G, V_c)`.
pub fn ned(stats: &ClusterStats) -> f64 {
    let size = stats.size as u64;
    let numerator = size + stats.internal_edges as u64 + stats.internal_degree as u64;
    let denominator = size + pairs(stats.size) + stats.graph_degree as u64;
    if denominator == 0 {
        return 0.0;
    }
    numerator as f64 / denominator as f64
}

/// `Σ NED(C_i)·D(C_i) / D(G)` from precomputed tallies. The weighted terms
/// are summed before the single division by `total_degree`.
pub fn nedindex_from_stats(stats: &[ClusterStats], total_degree: usize) -> f64 {
    if total_degree == 0 {
        return 0.0;
    }
    let weighted: f64 = stats
        .iter()
        .map(|s| ned(s) * s.internal_degree as f64)
        .sum();
    weighted / total_degree as f64
}

pub fn nedindex(g: &Graph, p: &Partition) -> Result<f64> {
    Ok(nedindex_from_stats(&all_cluster_stats(g, p)?, g.total_degree()))
}

/// `Σ_c [ |E_c|/E − (D(G,V_c)/2E)² ]`, the per-cluster form of
/// `(1/2E)·Σ_ij [A_ij − d_i d_j / 2E]·δ(s_i, s_j)`.
pub fn modularity_from_stats(stats: &[ClusterStats], edge_count: usize) -> f64 {
    if edge_count == 0 {
        return 0.0;
    }
    let m = edge_count as f64;
    let two_m = 2.0 * m;
    stats
        .iter()
        .map(|s| {
            let share = s.graph_degree as f64 / two_m;
            s.internal_edges as f64 / m - share * share
        })
        .sum()
}

pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    Ok(modularity_from_stats(&all_cluster_stats(g, p)?, g.edge_count()))
}

/// `cut / min(vol, D(G) − vol)`; a cluster without boundary scores 0.
pub fn cluster_conductance(stats: &ClusterStats, total_degree: usize) -> f64 {
    if stats.cut == 0 {
        return 0.0;
    }
    let outside = total_degree - stats.graph_degree;
    stats.cut as f64 / stats.graph_degree.min(outside) as f64
}

pub fn conductance_from_stats(stats: &[ClusterStats], total_degree: usize) -> f64 {
    if total_degree == 0 || stats.is_empty() {
        return 0.0;
    }
    let sum: f64 = stats
        .iter()
        .map(|s| cluster_conductance(s, total_degree))
        .sum();
    sum / stats.len() as f64
}

/// Mean per-cluster conductance.
pub fn conductance(g: &Graph, p: &Partition) -> Result<f64> {
    Ok(conductance_from_stats(
        &all_cluster_stats(g, p)?,
        g.total_degree(),
    ))
}

/// Normalized mutual information between two partitions of the same
/// vertices, with natural logarithms:
///
/// ```text
///            −2 Σ_ab N_ab ln(N_ab·n / (N_a·N_b))
/// NMI = ──────────────────────────────────────────
///       Σ_a N_a ln(N_a/n) + Σ_b N_b ln(N_b/n)
/// ```
///
/// Identical groupings score exactly 1. Otherwise, if either side is a
/// single cluster (zero entropy), the score is 0.
pub fn nmi(p: &Partition, q: &Partition) -> Result<f64> {
    let n = p.vertex_count();
    if n != q.vertex_count() {
        return Err(Error::InvalidPair {
            left: n,
            right: q.vertex_count(),
        });
    }
    let (kp, kq) = (p.cluster_count(), q.cluster_count());
    if p.same_grouping(q) {
        return Ok(1.0);
    }
    if kp <= 1 || kq <= 1 {
        return Ok(0.0);
    }

    let mut confusion = vec![0usize; kp * kq];
    for v in 0..n {
        confusion[p.cluster_of(v) * kq + q.cluster_of(v)] += 1;
    }
    let nf = n as f64;
    let mut mutual = 0.0;
    for a in 0..kp {
        let na = p.members(a).len() as f64;
        for b in 0..kq {
            let nab = confusion[a * kq + b];
            if nab > 0 {
                let nab = nab as f64;
                let nb = q.members(b).len() as f64;
                mutual += nab * libm::log(nab * nf / (na * nb));
            }
        }
    }
    let entropy = |part: &Partition| -> f64 {
        part.clusters()
            .map(|c| {
                let size = c.len() as f64;
                size * libm::log(size / nf)
            })
            .sum()
    };
    let denominator = entropy(p) + entropy(q);
    Ok((-2.0 * mutual / denominator).clamp(0.0, 1.0))
}

/// Every metric from one shared tally pass; NMI only against `reference`.
pub fn report(g: &Graph, p: &Partition, reference: Option<&Partition>) -> Result<MetricReport> {
    let stats = all_cluster_stats(g, p)?;
    let total = g.total_degree();
    let per_cluster_conductance: Vec<f64> = if total == 0 {
        vec![0.0; stats.len()]
    } else {
        stats.iter().map(|s| cluster_conductance(s, total)).collect()
    };
    Ok(MetricReport {
        cluster_count: p.cluster_count(),
        nedindex: nedindex_from_stats(&stats, total),
        modularity: modularity_from_stats(&stats, g.edge_count()),
        nmi: reference.map(|r| nmi(p, r)).transpose()?,
        conductance: conductance_from_stats(&stats, total),
        per_cluster_ned: stats.iter().map(ned).collect(),
        per_cluster_conductance,
    })
}
