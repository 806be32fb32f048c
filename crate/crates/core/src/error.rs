use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by graph construction, partitioning and the clusterers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id is not in `0..vertex_count`.
    InvalidVertex { vertex: usize, vertex_count: usize },
    /// A generator was asked for a graph below its minimum size.
    InvalidSize {
        kind: &'static str,
        requested: usize,
        minimum: usize,
    },
    /// A cluster assignment does not cover the graph's vertices.
    InvalidAssignment { expected: usize, found: usize },
    /// A cluster index is not in `0..cluster_count`.
    ClusterOutOfRange { cluster: usize, cluster_count: usize },
    /// Two partitions compared by NMI cover different vertex counts.
    InvalidPair { left: usize, right: usize },
    /// A requested cluster count is outside `1..=max`.
    KOutOfRange { k: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::InvalidVertex {
                vertex,
                vertex_count,
            } => write!(f, "vertex {vertex} out of range for graph with {vertex_count} vertices"),
            Error::InvalidSize {
                kind,
                requested,
                minimum,
            } => write!(f, "{kind} graph needs at least {minimum} vertices, got {requested}"),
            Error::InvalidAssignment { expected, found } => write!(
                f,
                "assignment covers {found} vertices but the graph has {expected}"
            ),
            Error::ClusterOutOfRange {
                cluster,
                cluster_count,
            } => write!(f, "cluster {cluster} out of range ({cluster_count} clusters)"),
            Error::InvalidPair { left, right } => write!(
                f,
                "partitions cover different vertex counts ({left} vs {right})"
            ),
            Error::KOutOfRange { k, max } => {
                write!(f, "cluster count {k} outside 1..={max}")
            }
        }
    }
}

impl core::error::Error for Error {}
