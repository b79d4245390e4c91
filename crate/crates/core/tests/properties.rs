use proptest::prelude::*;

use qgl_core::analysis::pearson;
use qgl_core::canon::{canonical_form, canonical_graph};
use qgl_core::dataset::{read_dataset, read_qaoa, write_dataset, write_qaoa, DatasetRow, QaoaRow};
use qgl_core::graph6;
use qgl_core::pipeline::profile_row;
use qgl_core::qaoa::{AngleVector, QaoaProblem};
use qgl_core::Graph;
use std::f64::consts::{PI, TAU};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", move |g| g.n() >= min_n && g.is_connected())
}

fn with_permutation<S: Strategy<Value = Graph>>(
    s: S,
) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    s.prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<usize>>()).prop_shuffle();
        (Just(g), perm)
    })
}

fn angles(p: usize) -> impl Strategy<Value = AngleVector> {
    (
        proptest::collection::vec(0.0..TAU, p),
        proptest::collection::vec(0.0..PI, p),
    )
        .prop_map(|(g, b)| AngleVector::new(g, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn graph6_round_trip(g in graph(16)) {
        let text = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in with_permutation(graph(8))) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let (_, cg) = canonical_graph(&g);
        let (_, ch) = canonical_graph(&h);
        prop_assert_eq!(cg, ch);
    }

    #[test]
    fn profile_is_relabeling_invariant((g, perm) in with_permutation(connected_graph(3, 8))) {
        let a = profile_row(&g).unwrap();
        let b = profile_row(&g.relabel(&perm).unwrap()).unwrap();
        prop_assert_eq!(
            (a.edges, a.diameter, a.clique_number, a.bipartite, a.eulerian, a.distance_regular, a.distance_regular_strict),
            (b.edges, b.diameter, b.clique_number, b.bipartite, b.eulerian, b.distance_regular, b.distance_regular_strict)
        );
        prop_assert_eq!(&a.degree_sequence, &b.degree_sequence);
        prop_assert_eq!(&a.cycle_counts, &b.cycle_counts);
        prop_assert_eq!(a.cycle_basis.len(), b.cycle_basis.len());
        prop_assert_eq!((a.group_size, a.orbit_count, a.cut_vertex_count), (b.group_size, b.orbit_count, b.cut_vertex_count));
        prop_assert_eq!(a.min_odd_cycle_count, b.min_odd_cycle_count);
        let mut mapped: Vec<usize> = a.cut_vertices.iter().map(|&v| perm[v]).collect();
        mapped.sort_unstable();
        prop_assert_eq!(mapped, b.cut_vertices);
    }

    #[test]
    fn evolution_preserves_norm((g, a) in (connected_graph(2, 8), (0usize..=3).prop_flat_map(angles))) {
        let problem = QaoaProblem::new(&g);
        prop_assert!((problem.evolve(&a).norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn metrics_are_periodic((g, a) in (connected_graph(2, 7), (1usize..=3).prop_flat_map(angles))) {
        let problem = QaoaProblem::new(&g);
        let sv = problem.evolve(&a);
        let base = (problem.expectation(&sv), problem.prob_cmax(&sv));
        let p = a.p();
        for k in 0..p {
            for (dg, db) in [(TAU, 0.0), (0.0, PI)] {
                let mut shifted = a.clone();
                shifted.gammas[k] += dg;
                shifted.betas[k] += db;
                let sv = problem.evolve(&shifted);
                prop_assert!((problem.expectation(&sv) - base.0).abs() < 1e-10);
                prop_assert!((problem.prob_cmax(&sv) - base.1).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn adjoint_gradient_matches_central_differences(
        (g, a) in (connected_graph(2, 6), (1usize..=3).prop_flat_map(angles))
    ) {
        let problem = QaoaProblem::new(&g);
        let (value, grad) = problem.expectation_and_gradient(&a);
        prop_assert!((value - problem.expectation(&problem.evolve(&a))).abs() < 1e-12);
        let x = a.to_flat();
        let h = 1e-5;
        for i in 0..x.len() {
            let eval = |d: f64| {
                let mut y = x.clone();
                y[i] += d;
                problem.expectation(&problem.evolve(&AngleVector::from_flat(&y)))
            };
            let fd = (eval(h) - eval(-h)) / (2.0 * h);
            let scale = grad[i].abs().max(1.0);
            prop_assert!((fd - grad[i]).abs() <= 1e-6 * scale, "component {}: fd {} adjoint {}", i, fd, grad[i]);
        }
    }

    #[test]
    fn expectation_matches_cost_vector((g, a) in (connected_graph(2, 6), (0usize..=2).prop_flat_map(angles))) {
        let problem = QaoaProblem::new(&g);
        let sv = problem.evolve(&a);
        let direct: f64 = sv
            .probabilities()
            .iter()
            .zip(problem.costs())
            .map(|(p, &c)| p * c as f64)
            .sum();
        prop_assert!((direct - problem.expectation(&sv)).abs() < 1e-12);
    }

    #[test]
    fn pearson_algebra(
        xy in (2usize..40).prop_flat_map(|n| (
            proptest::collection::vec(-10.0f64..10.0, n),
            proptest::collection::vec(-10.0f64..10.0, n),
        )),
        a in prop_oneof![-5.0f64..-0.5, 0.5f64..5.0],
        b in -10.0f64..10.0,
    ) {
        let (x, y) = xy;
        let r = pearson(&x, &y).unwrap();
        prop_assert_eq!(r.is_some(), pearson(&y, &x).unwrap().is_some());
        if let Some(r) = r {
            prop_assert!(r.abs() <= 1.0 + 1e-12);
            prop_assert!((r - pearson(&y, &x).unwrap().unwrap()).abs() < 1e-12);
            let ax: Vec<f64> = x.iter().map(|v| a * v + b).collect();
            let r2 = pearson(&ax, &y).unwrap().unwrap();
            prop_assert!((r2 - a.signum() * r).abs() < 1e-12);
        }
    }

    #[test]
    fn dataset_rows_round_trip(graphs in proptest::collection::vec(connected_graph(5, 5), 1..8)) {
        let rows: Vec<DatasetRow> = graphs
            .iter()
            .enumerate()
            .map(|(i, g)| profile_row(&g.with_id(i as u32 + 1)).unwrap())
            .collect();
        let mut buf = Vec::new();
        write_dataset(&mut buf, &rows).unwrap();
        prop_assert_eq!(read_dataset(&buf[..]).unwrap(), rows);
    }

    #[test]
    fn qaoa_rows_reserialize_identically(
        values in proptest::collection::vec((0usize..=3, proptest::collection::vec(-10.0f64..10.0, 9), any::<bool>()), 1..6)
    ) {
        let rows: Vec<QaoaRow> = values
            .into_iter()
            .enumerate()
            .map(|(i, (p, v, na))| QaoaRow {
                graph_id: i as u32 + 1,
                n: 4,
                graph6: "Cl".into(),
                p,
                gammas: v[..p].to_vec(),
                betas: v[3..3 + p].to_vec(),
                exp_c: v[6],
                prob_cmax: v[7],
                ratio: v[8],
                delta_ratio: if na { None } else { Some(v[0]) },
                cmax: 4,
                optimal_count: 2,
                starts: 200,
                seed: 1,
            })
            .collect();
        let mut first = Vec::new();
        write_qaoa(&mut first, &rows).unwrap();
        let back = read_qaoa(&first[..]).unwrap();
        for (a, b) in rows.iter().zip(&back) {
            prop_assert!((a.exp_c - b.exp_c).abs() <= 1e-11 * a.exp_c.abs().max(1.0));
            prop_assert_eq!(a.delta_ratio.is_some(), b.delta_ratio.is_some());
            prop_assert_eq!(a.gammas.len(), b.gammas.len());
        }
        let mut second = Vec::new();
        write_qaoa(&mut second, &back).unwrap();
        prop_assert_eq!(first, second);
    }
}
