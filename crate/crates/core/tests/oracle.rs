use supersat::constructions::{upper_bound_graph, ex_bowtie};
use supersat::counting::count_bowties;
use supersat::optimizer::minimize_f;
use supersat::oracle::{ex_exact, extremal_uniqueness, h_exact, OracleConfig};
use supersat::Graph;

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn ex_matches_turan_value() {
    for (n, ex) in [(5, 7), (6, 10), (7, 13)] {
        let r = ex_exact(n, &OracleConfig::default()).unwrap();
        assert_eq!(r.optimum, ex);
        assert_eq!(r.optimum, ex_bowtie(n).unwrap());
        for w in &r.witness_graphs {
            let g = w.to_graph().unwrap();
            assert_eq!(g.edge_count() as u128, ex);
            assert_eq!(count_bowties(&g).unwrap(), 0);
        }
    }
}

// values frozen from an independent brute force
const H: [(usize, usize, u128, u128); 5] = [
    (5, 1, 2, 45),
    (5, 2, 6, 10),
    (6, 1, 4, 90),
    (6, 2, 12, 15),
    (7, 1, 3, 105),
];

#[test]
fn h_small_cells() {
    for (n, q, h, optimal) in H {
        let audit = h_exact(n, q, &OracleConfig::audit()).unwrap();
        let edges = ex_bowtie(n).unwrap() as u128 + q as u128;
        assert_eq!(audit.graphs_examined, binomial((n * (n - 1) / 2) as u128, edges), "({n},{q})");
        assert_eq!((audit.optimum, audit.optimal_graphs), (h, optimal), "({n},{q})");

        let pruned = h_exact(n, q, &OracleConfig::default()).unwrap();
        assert_eq!(pruned.optimum, h);
        assert!(pruned.graphs_examined <= audit.graphs_examined);
        for w in &pruned.witness_graphs {
            let g = w.to_graph().unwrap();
            assert_eq!(g.edge_count() as u128, edges);
            assert_eq!(count_bowties(&g).unwrap(), h);
        }
    }
}

#[test]
fn oracle_never_exceeds_constructions() {
    for (n, q, _, _) in H {
        let h = h_exact(n, q, &OracleConfig::default()).unwrap().optimum;
        let t = minimize_f(n, q, 2).unwrap();
        assert!(h <= t.min_value);
        assert_eq!(h, t.min_value, "small-n exception at ({n},{q})");
    }
    let h = h_exact(8, 0, &OracleConfig::default()).unwrap().optimum;
    assert!(h <= count_bowties(&upper_bound_graph(8, 0).unwrap()).unwrap());
}

#[test]
fn zero_surplus_is_bowtie_free() {
    for n in 5..=7 {
        assert_eq!(h_exact(n, 0, &OracleConfig::default()).unwrap().optimum, 0);
    }
}

#[test]
fn reports_do_not_depend_on_threads() {
    let run = |threads| {
        let cfg = OracleConfig { threads: Some(threads), ..OracleConfig::default() };
        let r = h_exact(6, 2, &cfg).unwrap();
        (r.optimum, r.optimal_graphs, r.graphs_examined, r.witness_graphs)
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(3));
    let a = ex_exact(6, &OracleConfig { threads: Some(1), ..OracleConfig::default() }).unwrap();
    let b = ex_exact(6, &OracleConfig { threads: Some(5), ..OracleConfig::default() }).unwrap();
    assert_eq!((a.optimum, a.graphs_examined, a.witness_graphs), (b.optimum, b.graphs_examined, b.witness_graphs));
}

#[test]
fn pruning_does_not_change_ex() {
    for n in 4..=6 {
        let audit = OracleConfig { budget: u128::MAX, ..OracleConfig::audit() };
        assert_eq!(
            ex_exact(n, &audit).unwrap().optimum,
            ex_exact(n, &OracleConfig::default()).unwrap().optimum
        );
    }
}

#[test]
fn extremal_classes() {
    let cfg = OracleConfig::default();
    let r6 = extremal_uniqueness(6, &cfg).unwrap();
    assert_eq!((r6.labeled_graphs, r6.classes.len()), (60, 1));
    assert!(r6.all_turan_plus_edge);
    let r7 = extremal_uniqueness(7, &cfg).unwrap();
    assert_eq!((r7.labeled_graphs, r7.classes.len()), (315, 2));
    assert!(r7.all_turan_plus_edge);

    // at n = 5, K4 plus a pendant edge is a third extremal graph
    let r5 = extremal_uniqueness(5, &cfg).unwrap();
    assert_eq!((r5.labeled_graphs, r5.classes.len()), (60, 3));
    let odd: Vec<Graph> = r5
        .classes
        .iter()
        .filter(|c| !c.is_turan_plus_edge)
        .map(|c| c.representative.to_graph().unwrap())
        .collect();
    assert_eq!(odd.len(), 1);
    let mut degrees = odd[0].degrees();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![1, 3, 3, 3, 4]);
}
