//! File formats, the cluster-count sweep harness and CLI plumbing on top of
//! [`nedindex_core`].
//!
//! - [`io`] reads whitespace-separated edge lists (SNAP style, `#`/`%`
//!   comments) and `label cluster` partition files, and writes both back in
//!   canonical form.
//! - [`harness`] runs a clusterer over a range of cluster counts, scores each
//!   result with every metric, averages repeats and emits CSV.
//! - [`source`] parses the CLI's graph-source and range syntax.

pub use nedindex_core as core;

mod error;
pub mod harness;
pub mod io;
pub mod source;

pub use error::{Error, Result};
