use nedindex_core::clustering::{cut_maxclust, linkage, KMeans, Linkage};
use nedindex_core::partition::all_cluster_stats;
use nedindex_core::{build_graph, generators, metrics, Graph, Partition};
use proptest::prelude::*;

fn edge_list(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..n * 3)))
}

fn graph_and_labels(max_n: usize, max_k: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    edge_list(max_n).prop_flat_map(move |(n, edges)| {
        let g = Graph::from_edges(n, edges).unwrap();
        (Just(g), prop::collection::vec(0..max_k, n))
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.vertex_count(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edge_count((n, edges) in edge_list(40)) {
        let g = Graph::from_edges(n, edges).unwrap();
        prop_assert_eq!(g.degrees().sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!(g.total_degree(), 2 * g.edge_count());
        prop_assert!(g.check_invariants().is_ok());
    }

    #[test]
    fn build_is_permutation_invariant(
        edges in prop::collection::vec((0u8..20, 0u8..20), 0..60).prop_shuffle(),
        seed in any::<u64>(),
    ) {
        let a = build_graph(edges.clone(), None);
        let mut shuffled = edges;
        let len = shuffled.len();
        if len > 1 {
            shuffled.rotate_left((seed as usize) % len);
            shuffled.reverse();
        }
        let b = build_graph(shuffled, None);
        prop_assert_eq!(a.vertex_count(), b.vertex_count());
        prop_assert_eq!(a.edge_count(), b.edge_count());
        let mut da: Vec<usize> = a.degrees().collect();
        let mut db: Vec<usize> = b.degrees().collect();
        da.sort_unstable();
        db.sort_unstable();
        prop_assert_eq!(da, db);
    }

    #[test]
    fn degree_sums_over_complement_add_up((g, mask) in graph_and_labels(30, 2)) {
        let inside: Vec<usize> = (0..g.vertex_count()).filter(|&v| mask[v] == 1).collect();
        let outside: Vec<usize> = (0..g.vertex_count()).filter(|&v| mask[v] == 0).collect();
        prop_assert_eq!(
            g.degree_sum_over(&inside).unwrap() + g.degree_sum_over(&outside).unwrap(),
            g.total_degree()
        );
    }

    #[test]
    fn cluster_tallies_cover_the_graph((g, labels) in graph_and_labels(30, 6)) {
        let p = Partition::from_assignment(&g, &labels).unwrap();
        let stats = all_cluster_stats(&g, &p).unwrap();
        prop_assert_eq!(stats.iter().map(|s| s.size).sum::<usize>(), g.vertex_count());
        let internal: usize = stats.iter().map(|s| s.internal_edges).sum();
        let cut: usize = stats.iter().map(|s| s.cut).sum();
        prop_assert_eq!(internal + cut / 2, g.edge_count());
        prop_assert_eq!(stats.iter().map(|s| s.graph_degree).sum::<usize>(), g.total_degree());
        let inter = g.edges().any(|(u, v)| p.cluster_of(u) != p.cluster_of(v));
        let internal_degree: usize = stats.iter().map(|s| s.internal_degree).sum();
        prop_assert!(internal_degree <= g.total_degree());
        prop_assert_eq!(internal_degree == g.total_degree(), !inter);
        for s in &stats {
            prop_assert!(s.size >= 1);
            prop_assert_eq!(s.internal_degree, 2 * s.internal_edges);
            prop_assert!(s.internal_edges <= s.size * (s.size - 1) / 2);
            prop_assert_eq!(s.cut, s.graph_degree - s.internal_degree);
        }
    }

    #[test]
    fn metric_bounds((g, labels) in graph_and_labels(40, 8)) {
        let p = Partition::from_assignment(&g, &labels).unwrap();
        let r = metrics::report(&g, &p, Some(&p)).unwrap();
        prop_assert!((0.0..=1.0).contains(&r.nedindex));
        prop_assert!(r.per_cluster_ned.iter().all(|&x| x > 0.0 && x <= 1.0));
        prop_assert!((0.0..=1.0).contains(&r.conductance));
        prop_assert!((-1.0..=1.0).contains(&r.modularity));
        prop_assert_eq!(r.nmi, Some(1.0));
    }

    #[test]
    fn modularity_matches_double_sum((g, labels) in graph_and_labels(50, 8)) {
        prop_assume!(g.edge_count() > 0);
        let p = Partition::from_assignment(&g, &labels).unwrap();
        let two_m = g.total_degree() as f64;
        let mut q = 0.0;
        for i in 0..g.vertex_count() {
            for j in 0..g.vertex_count() {
                if p.cluster_of(i) == p.cluster_of(j) {
                    let a = if g.has_edge(i, j) { 1.0 } else { 0.0 };
                    q += a - (g.degree(i) * g.degree(j)) as f64 / two_m;
                }
            }
        }
        prop_assert!((metrics::modularity(&g, &p).unwrap() - q / two_m).abs() < 1e-12);
    }

    #[test]
    fn trivial_partitions((n, edges) in edge_list(40)) {
        let g = Graph::from_edges(n, edges).unwrap();
        prop_assert_eq!(metrics::nedindex(&g, &Partition::singletons(n)).unwrap(), 0.0);
        if g.edge_count() > 0 {
            prop_assert_eq!(metrics::modularity(&g, &Partition::single(n)).unwrap(), 0.0);
        }
    }

    #[test]
    fn clique_unions_score_one(sizes in prop::collection::vec(2usize..7, 1..5)) {
        let g = generators::disjoint_cliques(&sizes);
        let labels: Vec<usize> = sizes.iter().enumerate().flat_map(|(c, &s)| std::iter::repeat_n(c, s)).collect();
        let p = Partition::from_assignment(&g, &labels).unwrap();
        prop_assert_eq!(metrics::nedindex(&g, &p).unwrap(), 1.0);
    }

    #[test]
    fn nmi_is_symmetric(
        labels in (2usize..40).prop_flat_map(|n| (prop::collection::vec(0..5usize, n), prop::collection::vec(0..5usize, n)))
    ) {
        let p = Partition::from_labels(labels.0);
        let q = Partition::from_labels(labels.1);
        let pq = metrics::nmi(&p, &q).unwrap();
        prop_assert!((pq - metrics::nmi(&q, &p).unwrap()).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&pq));
        if p.cluster_count() >= 2 {
            prop_assert_eq!(metrics::nmi(&p, &p).unwrap(), 1.0);
        }
    }

    #[test]
    fn metrics_ignore_vertex_and_cluster_relabeling(
        (g, labels) in graph_and_labels(30, 6),
        seed in any::<u64>(),
    ) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        let mut moved = vec![0; n];
        for v in 0..n {
            moved[perm[v]] = 5 - labels[v];
        }
        let p = Partition::from_assignment(&g, &labels).unwrap();
        let q = Partition::from_assignment(&h, &moved).unwrap();
        let a = metrics::report(&g, &p, None).unwrap();
        let b = metrics::report(&h, &q, None).unwrap();
        prop_assert!((a.nedindex - b.nedindex).abs() < 1e-12);
        prop_assert!((a.modularity - b.modularity).abs() < 1e-12);
        prop_assert!((a.conductance - b.conductance).abs() < 1e-12);
    }

    #[test]
    fn cuts_are_nested((n, edges) in edge_list(30), method in prop_oneof![Just(Linkage::Single), Just(Linkage::Complete), Just(Linkage::Average)]) {
        let g = Graph::from_edges(n, edges).unwrap();
        let d = linkage(&g, method);
        prop_assert_eq!(d.merges().len(), n - 1);
        prop_assert!(d.merges().windows(2).all(|w| w[0].distance <= w[1].distance));
        let cuts: Vec<Partition> = (1..=n).map(|k| cut_maxclust(&d, k).unwrap()).collect();
        prop_assert_eq!(cuts[0].cluster_count(), 1);
        prop_assert_eq!(cuts[n - 1].cluster_count(), n);
        for k in 1..=n {
            prop_assert!(cuts[k - 1].cluster_count() <= k);
            if k > 1 {
                prop_assert!(cuts[k - 2].cluster_count() <= cuts[k - 1].cluster_count());
                prop_assert!(cuts[k - 1].refines(&cuts[k - 2]));
            }
        }
        // nesting holds for any pair, not only neighbours
        prop_assert!(cuts[n - 1].refines(&cuts[n / 2]));
    }

    #[test]
    fn kmeans_is_reproducible_and_monotone((n, edges) in edge_list(30), k in 1usize..6, seed in any::<u64>()) {
        let g = Graph::from_edges(n, edges).unwrap();
        let k = k.min(n);
        let a = KMeans::new(k).seed(seed).max_iter(50).fit(&g).unwrap();
        let b = KMeans::new(k).seed(seed).max_iter(50).fit(&g).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.partition.cluster_count(), k);
        for w in a.objective_trace.windows(2) {
            prop_assert!(w[1] <= w[0] + 1e-9 * w[0].max(1.0));
        }
    }
}
