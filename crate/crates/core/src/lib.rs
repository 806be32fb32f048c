//! Graph-clustering quality metrics and the clusterers that feed them.
//!
//! The crate scores a flat clustering of a simple undirected graph with four
//! measures:
//!
//! - **NEDindex**, the internal-degree-weighted mean of a per-cluster
//!   node/edge/degree ratio ([`metrics::ned`], [`metrics::nedindex`]),
//! - **modularity** in its signed form ([`metrics::modularity`]),
//! - **normalized mutual information** between two partitions ([`metrics::nmi`]),
//! - mean per-cluster **conductance** ([`metrics::conductance`]).
//!
//! Partitions come from agglomerative clustering over adjacency rows with a
//! max-cluster tree cut ([`clustering::linkage`], [`clustering::cut_maxclust`])
//! or from Lloyd's k-means on the same rows ([`clustering::kmeans_rows`]).
//!
//! Everything here is `no_std` with `alloc`. File formats, timing and the
//! command line live in the companion `nedindex` crate.
//!
//! ```
//! use nedindex_core::{generators, metrics, Partition};
//!
//! let g = generators::figure2();
//! let p = Partition::from_assignment(&g, &[0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2]).unwrap();
//! let report = metrics::report(&g, &p, None).unwrap();
//! assert!((report.nedindex - 33.0 / 42.0).abs() < 1e-12);
//! assert!((report.modularity - 11.0 / 21.0).abs() < 1e-12);
//! ```
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod clustering;
pub mod datasets;
mod error;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod partition;

pub use error::{Error, Result};
pub use graph::{build_graph, Graph, GraphBuilder};
pub use metrics::MetricReport;
pub use partition::{ClusterStats, Partition};
