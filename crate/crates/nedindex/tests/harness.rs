use nedindex::core::clustering::Linkage;
use nedindex::core::{datasets, generators, metrics, Graph, Partition};
use nedindex::harness::{fixed_partition_report, sweep, write_sweep_csv, Method, SweepConfig};
use nedindex::io::{load_edge_list, write_edge_list};
use proptest::prelude::*;

fn letters(g: &Graph, groups: &[&str]) -> Partition {
    let mut labels = vec![usize::MAX; g.vertex_count()];
    for (c, group) in groups.iter().enumerate() {
        for ch in group.chars() {
            labels[g.vertex_by_label(&ch.to_string()).unwrap()] = c;
        }
    }
    Partition::from_assignment(g, &labels).unwrap()
}

fn labelled_edges(g: &Graph) -> Vec<(String, String)> {
    let mut edges: Vec<(String, String)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (g.label(u).into_owned(), g.label(v).into_owned());
            if a < b { (a, b) } else { (b, a) }
        })
        .collect();
    edges.sort();
    edges
}

proptest! {
    #[test]
    fn edge_list_round_trip(edges in prop::collection::vec(("[a-z]{1,3}", "[a-z]{1,3}"), 0..80)) {
        let text: String = edges.iter().map(|(a, b)| format!("{a} {b}\n")).collect();
        let g = load_edge_list(text.as_bytes()).unwrap();
        prop_assume!(g.degrees().all(|d| d > 0));
        let mut out = Vec::new();
        write_edge_list(&g, &mut out).unwrap();
        let h = load_edge_list(out.as_slice()).unwrap();
        prop_assert_eq!(g.vertex_count(), h.vertex_count());
        prop_assert_eq!(g.edge_count(), h.edge_count());
        prop_assert_eq!(labelled_edges(&g), labelled_edges(&h));
        for v in 0..g.vertex_count() {
            let w = h.vertex_by_label(&g.label(v)).unwrap();
            prop_assert_eq!(g.degree(v), h.degree(w));
        }
    }
}

#[test]
fn averaged_rows_are_means_of_repeats() {
    let g = generators::gnm(40, 150, 2);
    let mut cfg = SweepConfig::new(2..=8);
    cfg.method = Method::KMeans { max_iter: 100 };
    cfg.repeats = 4;
    let rows = sweep(&g, &cfg).unwrap();
    for chunk in rows.chunks(5) {
        let (reps, avg) = chunk.split_at(4);
        let avg = &avg[0];
        assert!(avg.is_average());
        for f in [
            (|r: &metrics::MetricReport| r.nedindex) as fn(&metrics::MetricReport) -> f64,
            |r| r.modularity,
            |r| r.conductance,
        ] {
            let mean = reps.iter().map(|r| f(&r.metrics)).sum::<f64>() / 4.0;
            assert!((f(&avg.metrics) - mean).abs() < 1e-12);
        }
    }
}

#[test]
fn identical_configs_give_identical_csv() {
    let g = datasets::karate_club();
    let mut cfg = SweepConfig::new(1..=34);
    cfg.method = Method::KMeans { max_iter: 50 };
    cfg.repeats = 2;
    cfg.base_seed = 9;
    cfg.reference = Some(datasets::karate_factions());
    let csv = |rows: &[nedindex::harness::SweepRecord]| {
        let mut out = Vec::new();
        write_sweep_csv(rows, &mut out, false).unwrap();
        out
    };
    let a = csv(&sweep(&g, &cfg).unwrap());
    let b = csv(&sweep(&g, &cfg).unwrap());
    assert_eq!(a, b);
}

#[test]
fn hierarchical_endpoints_match_trivial_partitions() {
    for g in [datasets::karate_club(), generators::wheel(9).unwrap(), generators::figure3()] {
        let n = g.vertex_count();
        for linkage in [Linkage::Single, Linkage::Complete, Linkage::Average] {
            let mut cfg = SweepConfig::new(1..=n);
            cfg.method = Method::Hierarchical(linkage);
            cfg.repeats = 2;
            let rows = sweep(&g, &cfg).unwrap();
            let one = metrics::report(&g, &Partition::single(n), None).unwrap();
            let all = metrics::report(&g, &Partition::singletons(n), None).unwrap();
            assert_eq!(rows[0].metrics, one);
            assert_eq!(rows[rows.len() - 2].metrics, all);
            assert_eq!(rows[2].metrics.nedindex, one.nedindex);
        }
    }
}

#[test]
fn nmi_column_follows_reference() {
    let g = datasets::karate_club();
    let mut cfg = SweepConfig::new(2..=3);
    cfg.repeats = 1;
    let rows = sweep(&g, &cfg).unwrap();
    assert!(rows.iter().all(|r| r.metrics.nmi.is_none()));
    cfg.reference = Some(datasets::karate_factions());
    let rows = sweep(&g, &cfg).unwrap();
    assert!(rows.iter().all(|r| r.metrics.nmi.is_some()));
}

#[test]
fn figure2_good_split_beats_intro_split() {
    let g = generators::figure2();
    let good = letters(&g, &["ABCD", "EFGH", "IJKL"]);
    let bad = letters(&g, &["ABCD", "EFJL", "GHIK"]);
    let reports = fixed_partition_report(
        &g,
        &[("cliques".into(), good), ("intro".into(), bad), ("whole".into(), Partition::single(12))],
    )
    .unwrap();
    assert_eq!(reports[0].0, "cliques");
    assert!((reports[0].1.nedindex - 33.0 / 42.0).abs() < 1e-12);
    assert!(reports[0].1.nedindex > reports[1].1.nedindex);
    assert_eq!(reports[2].1, metrics::report(&g, &Partition::single(12), None).unwrap());
}

#[test]
fn figure3_true_split_peaks_among_alternatives() {
    let g = generators::figure3();
    let candidates = [
        ("true", vec!["ABCDE", "FGHIJK", "LMNO"]),
        ("shift-e", vec!["ABCD", "EFGHIJK", "LMNO"]),
        ("shift-k", vec!["ABCDE", "FGHIJ", "KLMNO"]),
        ("shift-a", vec!["BCDE", "FGHIJK", "ALMNO"]),
        ("merge-12", vec!["ABCDEFGHIJK", "LMNO"]),
        ("merge-23", vec!["ABCDE", "FGHIJKLMNO"]),
        ("split-2", vec!["ABCDE", "FGH", "IJK", "LMNO"]),
        ("mixed", vec!["ABCFG", "DEHIJ", "KLMNO"]),
        ("whole", vec!["ABCDEFGHIJKLMNO"]),
    ];
    let named: Vec<(String, Partition)> = candidates
        .iter()
        .map(|(name, groups)| (name.to_string(), letters(&g, groups)))
        .collect();
    let reports = fixed_partition_report(&g, &named).unwrap();
    let truth = reports[0].1.nedindex;
    for (name, r) in &reports[1..] {
        assert!(truth > r.nedindex, "{name}: {} ≥ {truth}", r.nedindex);
    }
}
