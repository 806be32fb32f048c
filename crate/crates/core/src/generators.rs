//! Deterministic graph generators: complete graphs, wheels, the two small
//! three-community fixtures and seeded random graphs.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize {
            kind: "complete",
            requested: n,
            minimum: 1,
        });
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The wheel on `n` vertices: hub `0` joined to every vertex of the cycle
/// `1, 2, …, n−1`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidSize {
            kind: "wheel",
            requested: n,
            minimum: 4,
        });
    }
    let rim = n - 1;
    let spokes = (1..n).map(|v| (0, v));
    let cycle = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    Graph::from_edges(n, spokes.chain(cycle))
}

/// Vertex-disjoint cliques of the given sizes, numbered consecutively.
pub fn disjoint_cliques(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let mut edges = Vec::new();
    let mut start = 0;
    for &size in sizes {
        for u in start..start + size {
            for v in u + 1..start + size {
                edges.push((u, v));
            }
        }
        start += size;
    }
    Graph::from_edges(n, edges).expect("ids are in range")
}

fn lettered(edges: &[(char, char)]) -> Graph {
    build_graph(
        edges
            .iter()
            .map(|&(a, b)| (String::from(a), b.to_string())),
        None,
    )
}

fn clique_edges(members: &str, out: &mut Vec<(char, char)>) {
    let cs: Vec<char> = members.chars().collect();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            out.push((cs[i], cs[j]));
        }
    }
}

/// Three 4-cliques `{A,B,C,D}`, `{E,F,G,H}`, `{I,J,K,L}` joined in a ring by
/// the single edges D–E, H–I and L–A: 12 vertices, 21 edges, each clique
/// with external degree 2.
pub fn figure2() -> Graph {
    let mut edges = Vec::new();
    for c in ["ABCD", "EFGH", "IJKL"] {
        clique_edges(c, &mut edges);
    }
    edges.extend([('D', 'E'), ('H', 'I'), ('L', 'A')]);
    lettered(&edges)
}

/// Three dense groups `{A..E}`, `{F..K}`, `{L..O}` with sparse bridges.
///
/// This is a reconstruction: a 5-clique, a 6-clique missing the F–K edge
/// and a 4-clique, joined by E–F, K–L, O–A and C–H.
pub fn figure3() -> Graph {
    let mut edges = Vec::new();
    for c in ["ABCDE", "FGHIJK", "LMNO"] {
        clique_edges(c, &mut edges);
    }
    edges.retain(|&e| e != ('F', 'K'));
    edges.extend([('E', 'F'), ('K', 'L'), ('O', 'A'), ('C', 'H')]);
    lettered(&edges)
}

pub(crate) fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// G(n, p): every pair is an edge independently with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if unit_f64(&mut rng) < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("ids are in range")
}

/// G(n, m): `m` distinct edges drawn uniformly. `m` is capped at
/// `n(n−1)/2`.
pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    let max = n * n.saturating_sub(1) / 2;
    let m = m.min(max);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = alloc::collections::BTreeSet::new();
    while chosen.len() < m {
        let u = (rng.next_u64() % n as u64) as usize;
        let v = (rng.next_u64() % n as u64) as usize;
        if u != v {
            chosen.insert((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, chosen).expect("ids are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_sizes() {
        let k4 = complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().all(|d| d == 3));
        let k1 = complete(1).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        assert_eq!(complete(8).unwrap().edge_count(), 28);
        assert_eq!(complete(7).unwrap().total_degree(), 42);
        assert!(matches!(complete(0), Err(Error::InvalidSize { .. })));
    }

    #[test]
    fn wheel_sizes() {
        let w = wheel(7).unwrap();
        assert_eq!(w.edge_count(), 12);
        assert_eq!(w.degree(0), 6);
        assert!((1..7).all(|v| w.degree(v) == 3));
        assert_eq!(wheel(4).unwrap(), complete(4).unwrap());
        assert_eq!(wheel(10).unwrap().edge_count(), 18);
        assert!(matches!(wheel(3), Err(Error::InvalidSize { minimum: 4, .. })));
    }

    #[test]
    fn figure_fixtures() {
        let g = figure2();
        assert_eq!((g.vertex_count(), g.edge_count(), g.total_degree()), (12, 21, 42));
        let abcd: alloc::vec::Vec<usize> =
            "ABCD".chars().map(|c| g.vertex_by_label(&c.to_string()).unwrap()).collect();
        assert_eq!(g.degree_sum_over(&abcd).unwrap(), 14);

        let g = figure3();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.edge_count(), 10 + 14 + 6 + 4);
        assert!(g.check_invariants().is_ok());
    }

    #[test]
    fn random_generators_are_seeded() {
        assert_eq!(erdos_renyi(30, 0.3, 5), erdos_renyi(30, 0.3, 5));
        let g = gnm(50, 200, 1);
        assert_eq!(g.edge_count(), 200);
        assert_eq!(gnm(4, 100, 0).edge_count(), 6);
    }
}
