//! Edge-list and partition files.
//!
//! Edge lists hold one `u v` pair of whitespace-separated vertex tokens per
//! line. Lines starting with `#` or `%` are comments and blank lines are
//! skipped. The canonical writer emits a `#` header with the vertex and edge
//! counts, then one edge per line with `u < v` in dense-id order.
//!
//! Partition files hold one `vertex_label cluster_index` pair per line.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use nedindex_core::{Graph, GraphBuilder, MetricReport, Partition};

use crate::error::{Error, Result};

fn data_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::Io(e))),
            Ok(line) => {
                let trimmed = line.trim();
                if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
                    None
                } else {
                    Some(Ok((i + 1, trimmed.to_owned())))
                }
            }
        })
}

fn two_tokens(line_no: usize, line: &str) -> Result<(&str, &str)> {
    let mut tokens = line.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(Error::parse(
            line_no,
            format!(
                "expected 2 whitespace-separated tokens, found {}",
                line.split_whitespace().count()
            ),
        )),
    }
}

/// Parses an edge list. `u v` and `v u` collapse to one undirected edge,
/// self-loops only declare their vertex.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut builder = GraphBuilder::<String>::new();
    for entry in data_lines(reader) {
        let (line_no, line) = entry?;
        let (a, b) = two_tokens(line_no, &line)?;
        builder.add_edge(&a.to_owned(), &b.to_owned());
    }
    Ok(builder.build())
}

/// Writes `g` in canonical edge-list form.
pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> Result<()> {
    writeln!(w, "# vertices {} edges {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "{} {}", g.label(u), g.label(v))?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a partition of `g`'s vertices. Every vertex must be listed exactly
/// once; cluster indices may be any non-negative integers.
pub fn read_partition<R: BufRead>(g: &Graph, reader: R) -> Result<Partition> {
    let ids: HashMap<String, usize> = (0..g.vertex_count())
        .map(|v| (g.label(v).into_owned(), v))
        .collect();
    let mut assignment = vec![None; g.vertex_count()];
    for entry in data_lines(reader) {
        let (line_no, line) = entry?;
        let (label, cluster) = two_tokens(line_no, &line)?;
        let v = *ids
            .get(label)
            .ok_or_else(|| Error::parse(line_no, format!("unknown vertex {label:?}")))?;
        let cluster: usize = cluster
            .parse()
            .map_err(|_| Error::parse(line_no, format!("invalid cluster index {cluster:?}")))?;
        if assignment[v].replace(cluster).is_some() {
            return Err(Error::parse(line_no, format!("vertex {label:?} listed twice")));
        }
    }
    let missing = assignment.iter().filter(|c| c.is_none()).count();
    if missing > 0 {
        let first = assignment.iter().position(Option::is_none).unwrap();
        return Err(Error::parse(
            0,
            format!(
                "{missing} vertices have no cluster (first: {:?})",
                g.label(first)
            ),
        ));
    }
    let labels: Vec<usize> = assignment.into_iter().map(Option::unwrap).collect();
    Ok(Partition::from_assignment(g, &labels)?)
}

pub fn write_partition<W: Write>(g: &Graph, p: &Partition, mut w: W) -> Result<()> {
    for v in 0..g.vertex_count() {
        writeln!(w, "{} {}", g.label(v), p.cluster_of(v))?;
    }
    w.flush()?;
    Ok(())
}

/// One `k,nedindex,modularity,nmi,conductance` row per report, `nmi` empty
/// when absent.
pub fn write_metric_csv<'a, W, I>(rows: I, w: W) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = (usize, &'a MetricReport)>,
{
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["k", "nedindex", "modularity", "nmi", "conductance"])?;
    for (k, r) in rows {
        out.write_record([
            k.to_string(),
            r.nedindex.to_string(),
            r.modularity.to_string(),
            r.nmi.map(|x| x.to_string()).unwrap_or_default(),
            r.conductance.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}
