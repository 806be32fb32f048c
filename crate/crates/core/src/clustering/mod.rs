//! Clusterers that turn a graph into a [`Partition`](crate::Partition) with
//! a requested cluster count.

pub mod distance;
mod hierarchy;
mod kmeans;

pub use hierarchy::{cut_maxclust, hierarchical, linkage, linkage_single, Dendrogram, Linkage, Merge};
pub use kmeans::{kmeans_rows, KMeans, KMeansResult, DEFAULT_REPLICATES};
