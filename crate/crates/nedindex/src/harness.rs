//! Cluster-count sweeps: cluster at every `k` in a range, score with every
//! metric, repeat with successive seeds and average.

use std::io::Write;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use nedindex_core::clustering::{cut_maxclust, linkage, Dendrogram, KMeans, Linkage};
use nedindex_core::metrics::{self, MetricReport};
use nedindex_core::{Graph, Partition};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Clusterer used for each sweep cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Agglomerative clustering over adjacency rows, cut to at most `k`
    /// clusters. Deterministic, so repeats agree.
    Hierarchical(Linkage),
    /// Lloyd's k-means over adjacency rows, seeded per repeat.
    KMeans { max_iter: usize },
}

impl Default for Method {
    fn default() -> Self {
        Method::Hierarchical(Linkage::Single)
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub k_range: RangeInclusive<usize>,
    pub repeats: usize,
    pub method: Method,
    pub base_seed: u64,
    /// Ground truth for NMI; without it the NMI column stays empty.
    pub reference: Option<Partition>,
}

impl SweepConfig {
    pub fn new(k_range: RangeInclusive<usize>) -> Self {
        SweepConfig {
            k_range,
            repeats: 5,
            method: Method::default(),
            base_seed: 0,
            reference: None,
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let (lo, hi) = (*self.k_range.start(), *self.k_range.end());
        if lo == 0 || lo > hi || hi > g.vertex_count() {
            return Err(Error::Config(format!(
                "k range {lo}..{hi} must satisfy 1 ≤ lo ≤ hi ≤ {} (vertex count)",
                g.vertex_count()
            )));
        }
        if self.repeats == 0 {
            return Err(Error::Config("repeats must be at least 1".into()));
        }
        if let Some(r) = &self.reference {
            if r.vertex_count() != g.vertex_count() {
                return Err(Error::Config(format!(
                    "reference partition covers {} vertices, graph has {}",
                    r.vertex_count(),
                    g.vertex_count()
                )));
            }
        }
        Ok(())
    }
}

/// One row of a sweep. Averaged rows have `repeat_index == -1` and no seed.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub k: usize,
    pub repeat_index: i64,
    pub seed: Option<u64>,
    pub metrics: MetricReport,
    pub elapsed: Duration,
}

impl SweepRecord {
    pub fn is_average(&self) -> bool {
        self.repeat_index < 0
    }
}

fn run_cell(
    g: &Graph,
    cfg: &SweepConfig,
    tree: Option<&Dendrogram>,
    k: usize,
    repeat: usize,
) -> Result<SweepRecord> {
    let seed = cfg.base_seed.wrapping_add(repeat as u64);
    let started = Instant::now();
    let cell = |source| Error::Sweep { k, repeat, source };
    let partition = match (cfg.method, tree) {
        (Method::Hierarchical(_), Some(tree)) => cut_maxclust(tree, k).map_err(cell)?,
        (Method::KMeans { max_iter }, _) => KMeans::new(k)
            .seed(seed)
            .max_iter(max_iter)
            .fit(g)
            .map_err(cell)?
            .partition,
        (Method::Hierarchical(_), None) => unreachable!("dendrogram built before the sweep"),
    };
    let metrics = metrics::report(g, &partition, cfg.reference.as_ref()).map_err(cell)?;
    Ok(SweepRecord {
        k,
        repeat_index: repeat as i64,
        seed: Some(seed),
        metrics,
        elapsed: started.elapsed(),
    })
}

fn average(k: usize, rows: &[SweepRecord]) -> SweepRecord {
    let n = rows.len() as f64;
    let mean = |f: &dyn Fn(&MetricReport) -> f64| rows.iter().map(|r| f(&r.metrics)).sum::<f64>() / n;
    let nmi = if rows.iter().all(|r| r.metrics.nmi.is_some()) {
        Some(mean(&|m| m.nmi.unwrap()))
    } else {
        None
    };
    let clusters = rows.iter().map(|r| r.metrics.cluster_count).sum::<usize>() as f64 / n;
    SweepRecord {
        k,
        repeat_index: -1,
        seed: None,
        metrics: MetricReport {
            cluster_count: clusters.round() as usize,
            nedindex: mean(&|m| m.nedindex),
            modularity: mean(&|m| m.modularity),
            nmi,
            conductance: mean(&|m| m.conductance),
            per_cluster_ned: Vec::new(),
            per_cluster_conductance: Vec::new(),
        },
        elapsed: rows.iter().map(|r| r.elapsed).sum::<Duration>() / rows.len() as u32,
    }
}

/// Runs the sweep. For each `k` the output holds the repeat rows in order,
/// followed by their average. Cells run in parallel; the output order does
/// not depend on scheduling.
pub fn sweep(g: &Graph, cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    cfg.validate(g)?;
    let tree = match cfg.method {
        Method::Hierarchical(method) => Some(linkage(g, method)),
        Method::KMeans { .. } => None,
    };
    let cells: Vec<(usize, usize)> = cfg
        .k_range
        .clone()
        .flat_map(|k| (0..cfg.repeats).map(move |r| (k, r)))
        .collect();
    let rows = cells
        .par_iter()
        .map(|&(k, r)| run_cell(g, cfg, tree.as_ref(), k, r))
        .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::with_capacity(rows.len() + rows.len() / cfg.repeats);
    for chunk in rows.chunks(cfg.repeats) {
        let avg = average(chunk[0].k, chunk);
        out.extend_from_slice(chunk);
        out.push(avg);
    }
    Ok(out)
}

/// Scores each named partition of `g`.
pub fn fixed_partition_report(
    g: &Graph,
    partitions: &[(String, Partition)],
) -> Result<Vec<(String, MetricReport)>> {
    partitions
        .iter()
        .map(|(name, p)| Ok((name.clone(), metrics::report(g, p, None)?)))
        .collect()
}

/// Sweep CSV with header `k,repeat,seed,nedindex,modularity,nmi,conductance,elapsed_ms`.
///
/// With `timing == false` the `elapsed_ms` column is left empty so that
/// identical configurations produce identical bytes.
pub fn write_sweep_csv<W: Write>(records: &[SweepRecord], w: W, timing: bool) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record([
        "k",
        "repeat",
        "seed",
        "nedindex",
        "modularity",
        "nmi",
        "conductance",
        "elapsed_ms",
    ])?;
    for r in records {
        let m = &r.metrics;
        out.write_record([
            r.k.to_string(),
            r.repeat_index.to_string(),
            r.seed.map(|s| s.to_string()).unwrap_or_default(),
            m.nedindex.to_string(),
            m.modularity.to_string(),
            m.nmi.map(|x| x.to_string()).unwrap_or_default(),
            m.conductance.to_string(),
            if timing {
                format!("{:.3}", r.elapsed.as_secs_f64() * 1e3)
            } else {
                String::new()
            },
        ])?;
    }
    out.flush()?;
    Ok(())
}
