//! Immutable simple undirected graphs over dense vertex ids.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph with vertices `0..vertex_count`.
///
/// Adjacency lists are sorted and symmetric, there are no self-loops or
/// parallel edges, and the degree sum is always twice the edge count.
/// Optional labels keep the tokens a graph was built from so results can be
/// reported in the caller's vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `vertex_count` dense vertices.
    ///
    /// Self-loops are dropped and repeated edges (in either orientation)
    /// collapse to one.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::InvalidVertex {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u != v {
                pairs.push(if u < v { (u, v) } else { (v, u) });
            }
        }
        Ok(Self::from_pairs(vertex_count, pairs, None))
    }

    fn from_pairs(
        vertex_count: usize,
        mut pairs: Vec<(usize, usize)>,
        labels: Option<Vec<String>>,
    ) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        let mut adjacency = alloc::vec![Vec::new(); vertex_count];
        for &(u, v) in &pairs {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            adjacency,
            edge_count: pairs.len(),
            labels,
        }
    }

    /// An edgeless graph.
    pub fn empty(vertex_count: usize) -> Self {
        Self::from_pairs(vertex_count, Vec::new(), None)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Iterator over all vertex degrees in id order.
    pub fn degrees(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Sum of all degrees, `2 · edge_count`.
    pub fn total_degree(&self) -> usize {
        2 * self.edge_count
    }

    /// Sum of the full-graph degrees of `vertices`, including edges that
    /// leave the set.
    pub fn degree_sum_over(&self, vertices: &[usize]) -> Result<usize> {
        vertices.iter().try_fold(0, |acc, &v| {
            if v >= self.vertex_count() {
                Err(Error::InvalidVertex {
                    vertex: v,
                    vertex_count: self.vertex_count(),
                })
            } else {
                Ok(acc + self.degree(v))
            }
        })
    }

    /// The label `v` was built from, or its dense id when unlabeled.
    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Dense id of the vertex labelled `label`. Unlabeled graphs resolve
    /// decimal ids.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&v| v < self.vertex_count()),
        }
    }

    /// Re-checks the structural invariants. Graphs built through this crate
    /// always pass; the check exists for callers that want to assert it.
    pub fn check_invariants(&self) -> core::result::Result<(), &'static str> {
        let mut degree_sum = 0;
        for (u, ns) in self.adjacency.iter().enumerate() {
            if ns.windows(2).any(|w| w[0] >= w[1]) {
                return Err("adjacency list not strictly sorted");
            }
            for &v in ns {
                if v == u {
                    return Err("self-loop");
                }
                if !self.has_edge(v, u) {
                    return Err("asymmetric adjacency");
                }
            }
            degree_sum += ns.len();
        }
        if degree_sum != 2 * self.edge_count {
            return Err("degree sum differs from twice the edge count");
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.vertex_count() {
                return Err("label count differs from vertex count");
            }
        }
        Ok(())
    }
}

/// Incremental construction from arbitrary vertex tokens.
///
/// Tokens get dense ids in first-appearance order. A self-loop declares its
/// vertex but adds no edge.
#[derive(Debug, Clone)]
pub struct GraphBuilder<T> {
    ids: BTreeMap<T, usize>,
    labels: Vec<String>,
    pairs: Vec<(usize, usize)>,
    vertex_hint: usize,
}

impl<T: Ord + Clone + fmt::Display> Default for GraphBuilder<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Ord + Clone + fmt::Display> GraphBuilder<T> {
    pub fn new() -> Self {
        GraphBuilder {
            ids: BTreeMap::new(),
            labels: Vec::new(),
            pairs: Vec::new(),
            vertex_hint: 0,
        }
    }

    /// Pads the graph with isolated vertices up to `count` vertices. Padding
    /// vertices are labelled with their dense id.
    pub fn vertex_hint(mut self, count: usize) -> Self {
        self.vertex_hint = count;
        self
    }

    /// Declares a vertex and returns its dense id.
    pub fn add_vertex(&mut self, token: &T) -> usize {
        if let Some(&id) = self.ids.get(token) {
            return id;
        }
        let id = self.labels.len();
        self.ids.insert(token.clone(), id);
        self.labels.push(token.to_string());
        id
    }

    pub fn add_edge(&mut self, a: &T, b: &T) {
        let u = self.add_vertex(a);
        let v = self.add_vertex(b);
        if u != v {
            self.pairs.push(if u < v { (u, v) } else { (v, u) });
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len().max(self.vertex_hint)
    }

    pub fn build(self) -> Graph {
        let n = self.vertex_count();
        let mut labels = self.labels;
        while labels.len() < n {
            labels.push(labels.len().to_string());
        }
        Graph::from_pairs(n, self.pairs, Some(labels))
    }
}

/// Builds a graph from token pairs, collapsing duplicates and dropping
/// self-loops.
pub fn build_graph<T, I>(edges: I, vertex_hint: Option<usize>) -> Graph
where
    T: Ord + Clone + fmt::Display,
    I: IntoIterator<Item = (T, T)>,
{
    let mut builder = GraphBuilder::new().vertex_hint(vertex_hint.unwrap_or(0));
    for (a, b) in edges {
        builder.add_edge(&a, &b);
    }
    builder.build()
}
