//! Lloyd's k-means over adjacency rows with greedy k-means++ seeding.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::distance::RowDistances;
use crate::error::{Error, Result};
use crate::generators::unit_f64;
use crate::graph::Graph;
use crate::partition::Partition;

/// Restarts run by default. A single k-means++ draw can put two centers in
/// one dense block and Lloyd cannot leave that fixed point.
pub const DEFAULT_REPLICATES: usize = 10;

/// k-means configuration. Each replicate is seeded from the same ChaCha
/// stream, so a fixed `(graph, k, seed)` always yields the same result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KMeans {
    k: usize,
    seed: u64,
    max_iter: usize,
    replicates: usize,
}

/// Outcome of the best replicate.
#[derive(Debug, Clone, PartialEq)]
pub struct KMeansResult {
    pub partition: Partition,
    /// Within-cluster sum of squared distances after each Lloyd iteration.
    pub objective_trace: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

impl KMeansResult {
    pub fn objective(&self) -> f64 {
        self.objective_trace.last().copied().unwrap_or(0.0)
    }
}

impl KMeans {
    pub fn new(k: usize) -> Self {
        KMeans {
            k,
            seed: 0,
            max_iter: 300,
            replicates: DEFAULT_REPLICATES,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter.max(1);
        self
    }

    /// Independent restarts; the lowest final objective wins, earliest on ties.
    pub fn replicates(mut self, replicates: usize) -> Self {
        self.replicates = replicates.max(1);
        self
    }

    pub fn fit(&self, g: &Graph) -> Result<KMeansResult> {
        let n = g.vertex_count();
        if self.k == 0 || self.k > n {
            return Err(Error::KOutOfRange { k: self.k, max: n });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut best: Option<KMeansResult> = None;
        for _ in 0..self.replicates {
            let centers = seed_centers(g, self.k, &mut rng);
            let run = Lloyd::new(g, &centers).run(self.max_iter);
            if best.as_ref().is_none_or(|b| run.objective() < b.objective()) {
                best = Some(run);
            }
        }
        Ok(best.expect("at least one replicate"))
    }
}

/// Lloyd's algorithm on adjacency rows, k-means++ seeded from `seed`, best
/// of [`DEFAULT_REPLICATES`] restarts.
pub fn kmeans_rows(g: &Graph, k: usize, seed: u64, max_iter: usize) -> Result<Partition> {
    Ok(KMeans::new(k).seed(seed).max_iter(max_iter).fit(g)?.partition)
}

/// Greedy k-means++: each new center is the best of `2 + ⌊ln k⌋` D²-sampled
/// candidates by resulting potential. When every remaining point coincides
/// with a center, the lowest unused id is taken.
fn seed_centers(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = g.vertex_count();
    let trials = 2 + libm::log(k as f64) as usize;
    let mut rows = RowDistances::new(n);
    let mut candidate_row = vec![0usize; n];
    let mut nearest = vec![0usize; n];
    let mut chosen = vec![false; n];

    let first = ((unit_f64(rng) * n as f64) as usize).min(n - 1);
    rows.fill(g, first, &mut nearest);
    chosen[first] = true;
    let mut centers = vec![first];

    while centers.len() < k {
        let potential: u64 = nearest.iter().map(|&d| d as u64).sum();
        let pick = if potential == 0 {
            chosen.iter().position(|&c| !c).expect("k ≤ n")
        } else {
            let mut best: Option<(u64, usize)> = None;
            for _ in 0..trials {
                let candidate = sample_weighted(&nearest, potential, rng);
                rows.fill(g, candidate, &mut candidate_row);
                let after: u64 = nearest
                    .iter()
                    .zip(&candidate_row)
                    .map(|(&a, &b)| a.min(b) as u64)
                    .sum();
                if best.is_none_or(|(p, _)| after < p) {
                    best = Some((after, candidate));
                }
            }
            best.unwrap().1
        };
        rows.fill(g, pick, &mut candidate_row);
        for (a, &b) in nearest.iter_mut().zip(&candidate_row) {
            *a = (*a).min(b);
        }
        chosen[pick] = true;
        centers.push(pick);
    }
    centers
}

fn sample_weighted(weights: &[usize], total: u64, rng: &mut ChaCha8Rng) -> usize {
    let target = rng.next_u64() % total;
    let mut acc = 0u64;
    for (i, &w) in weights.iter().enumerate() {
        acc += w as u64;
        if target < acc {
            return i;
        }
    }
    unreachable!("target below total weight")
}

struct Lloyd<'g> {
    g: &'g Graph,
    k: usize,
    /// Dense `k × n` centroid coordinates.
    centroids: Vec<f64>,
    norms: Vec<f64>,
    assignment: Vec<usize>,
    distance: Vec<f64>,
}

impl<'g> Lloyd<'g> {
    fn new(g: &'g Graph, centers: &[usize]) -> Self {
        let n = g.vertex_count();
        let k = centers.len();
        let mut lloyd = Lloyd {
            g,
            k,
            centroids: vec![0.0; k * n],
            norms: vec![0.0; k],
            assignment: vec![usize::MAX; n],
            distance: vec![0.0; n],
        };
        for (c, &v) in centers.iter().enumerate() {
            lloyd.place_at_point(c, v);
        }
        lloyd
    }

    fn place_at_point(&mut self, c: usize, v: usize) {
        let n = self.g.vertex_count();
        let centroid = &mut self.centroids[c * n..(c + 1) * n];
        centroid.fill(0.0);
        for &x in self.g.neighbors(v) {
            centroid[x] = 1.0;
        }
        self.norms[c] = self.g.degree(v) as f64;
    }

    fn distance_sq(&self, v: usize, c: usize) -> f64 {
        let n = self.g.vertex_count();
        let centroid = &self.centroids[c * n..(c + 1) * n];
        let dot: f64 = self.g.neighbors(v).iter().map(|&x| centroid[x]).sum();
        (self.g.degree(v) as f64 + self.norms[c] - 2.0 * dot).max(0.0)
    }

    /// Moves points only to strictly closer centroids. Returns whether any
    /// point moved.
    fn assign(&mut self) -> bool {
        let mut changed = false;
        for v in 0..self.g.vertex_count() {
            let current = self.assignment[v];
            let (mut best, mut best_d) = if current == usize::MAX {
                (usize::MAX, f64::INFINITY)
            } else {
                (current, self.distance_sq(v, current))
            };
            for c in 0..self.k {
                if c == current {
                    continue;
                }
                let d = self.distance_sq(v, c);
                if d < best_d {
                    best = c;
                    best_d = d;
                }
            }
            if best != current {
                self.assignment[v] = best;
                changed = true;
            }
            self.distance[v] = best_d;
        }
        changed
    }

    /// Gives each empty cluster the point farthest from its centroid, taken
    /// from a cluster that keeps at least one member.
    fn repair_empty(&mut self) -> bool {
        let mut sizes = vec![0usize; self.k];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        let mut repaired = false;
        for empty in 0..self.k {
            if sizes[empty] != 0 {
                continue;
            }
            let mut far: Option<usize> = None;
            for v in 0..self.g.vertex_count() {
                if sizes[self.assignment[v]] >= 2
                    && far.is_none_or(|f| self.distance[v] > self.distance[f])
                {
                    far = Some(v);
                }
            }
            let v = far.expect("k ≤ n leaves a cluster with two members");
            sizes[self.assignment[v]] -= 1;
            sizes[empty] = 1;
            self.assignment[v] = empty;
            self.distance[v] = 0.0;
            self.place_at_point(empty, v);
            repaired = true;
        }
        repaired
    }

    fn update(&mut self) {
        let n = self.g.vertex_count();
        let mut sizes = vec![0usize; self.k];
        self.centroids.fill(0.0);
        for v in 0..n {
            let c = self.assignment[v];
            sizes[c] += 1;
            for &x in self.g.neighbors(v) {
                self.centroids[c * n + x] += 1.0;
            }
        }
        for (c, &size) in sizes.iter().enumerate() {
            let centroid = &mut self.centroids[c * n..(c + 1) * n];
            let inv = 1.0 / size as f64;
            let mut norm = 0.0;
            for x in centroid.iter_mut() {
                *x *= inv;
                norm += *x * *x;
            }
            self.norms[c] = norm;
        }
    }

    fn objective(&self) -> f64 {
        (0..self.g.vertex_count())
            .map(|v| self.distance_sq(v, self.assignment[v]))
            .sum()
    }

    fn run(mut self, max_iter: usize) -> KMeansResult {
        let mut trace = Vec::new();
        let mut converged = false;
        let mut iterations = 0;
        while iterations < max_iter {
            iterations += 1;
            let moved = self.assign();
            let repaired = self.repair_empty();
            if !moved && !repaired && !trace.is_empty() {
                converged = true;
                break;
            }
            self.update();
            trace.push(self.objective());
        }
        KMeansResult {
            partition: Partition::from_labels(self.assignment),
            objective_trace: trace,
            iterations,
            converged,
        }
    }
}
