use std::fs;

use qgl_core::analysis::{
    correlation_table, group_averages, histogram, Flag, Metric, Property, SaturatedDelta,
};
use qgl_core::canon::enumerate_connected;
use qgl_core::config::RunConfig;
use qgl_core::dataset::{DatasetRow, QaoaRow};
use qgl_core::pipeline::{self, profile_rows, qaoa_rows};
use qgl_core::qaoa::OptimizerConfig;

fn slice(n: usize, p_max: usize, starts: usize) -> (Vec<DatasetRow>, Vec<QaoaRow>) {
    let graphs = enumerate_connected(n).unwrap();
    let config = OptimizerConfig {
        starts,
        ..Default::default()
    };
    (
        profile_rows(&graphs, 2).unwrap(),
        qaoa_rows(&graphs, p_max, &config, 1, 2).unwrap(),
    )
}

fn r(cells: &[qgl_core::analysis::CorrelationCell], property: Property, metric: Metric) -> f64 {
    cells
        .iter()
        .find(|c| c.property == property && c.metric == metric)
        .and_then(|c| c.r)
        .unwrap()
}

#[test]
fn uniform_state_correlations() {
    let (profiles, rows) = slice(8, 0, 1);
    let cells = correlation_table(&profiles, &rows, 8, 0).unwrap();
    assert!((r(&cells, Property::Edges, Metric::ExpC) - 1.0).abs() < 1e-9);
    assert!((r(&cells, Property::Diameter, Metric::ExpC) + 0.691).abs() < 2e-3);
    assert!(cells
        .iter()
        .all(|c| c.r.is_none_or(|r| r.abs() <= 1.0 + 1e-12)));

    // deterministic: a second run agrees bit for bit
    let again = correlation_table(&profiles, &slice(8, 0, 1).1, 8, 0).unwrap();
    assert_eq!(cells, again);

    let (profiles, rows) = slice(4, 0, 1);
    let cells = correlation_table(&profiles, &rows, 4, 0).unwrap();
    // bipartite encoded TRUE = 1: bipartite graphs have fewer edges
    assert!((r(&cells, Property::Bipartite, Metric::ExpC) + 0.781).abs() < 2e-3);
    // Δ is undefined at depth 0
    assert!(cells
        .iter()
        .filter(|c| c.metric == Metric::DeltaRatio)
        .all(|c| c.r.is_none() && c.sample_size == 0));
}

#[test]
fn subgroup_averages() {
    let (profiles, rows) = slice(4, 1, 50);
    let [b, nb] = group_averages(
        &profiles,
        &rows,
        4,
        0,
        Flag::Bipartite,
        SaturatedDelta::default(),
    )
    .unwrap();
    assert!((b.mean_exp_c.unwrap() - 1.667).abs() < 5e-4);
    assert!((nb.mean_exp_c.unwrap() - 2.5).abs() < 5e-4);
    assert_eq!(b.count + nb.count, 6);
    assert_eq!(b.mean_delta, None);

    let [e, ne] = group_averages(
        &profiles,
        &rows,
        4,
        1,
        Flag::Eulerian,
        SaturatedDelta::default(),
    )
    .unwrap();
    assert!((e.mean_exp_c.unwrap() - 3.0).abs() < 5e-4);
    assert!((e.mean_delta.unwrap() - 0.5).abs() < 5e-4);
    assert_eq!(e.count + ne.count, 6);

    let (profiles, rows) = slice(5, 0, 1);
    let [e, ne] = group_averages(
        &profiles,
        &rows,
        5,
        0,
        Flag::Eulerian,
        SaturatedDelta::default(),
    )
    .unwrap();
    assert!((e.mean_exp_c.unwrap() - 3.5).abs() < 5e-4);
    assert_eq!(e.count + ne.count, 21);
}

#[test]
fn histograms_are_normalized() {
    let (profiles, rows) = slice(5, 1, 20);
    let h = histogram(
        &profiles,
        &rows,
        5,
        1,
        Some(Flag::Bipartite),
        Metric::ProbCmax,
        20,
    )
    .unwrap();
    assert_eq!(h.edges.len(), 21);
    assert_eq!(h.groups.len(), 2);
    assert_eq!(h.groups.iter().map(|g| g.count).sum::<usize>(), 21);
    for g in &h.groups {
        assert!(g.fractions.iter().all(|&f| f >= 0.0));
        assert!((g.fractions.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    }

    let one = histogram(&profiles, &rows, 5, 0, None, Metric::Ratio, 1).unwrap();
    assert_eq!(one.groups[0].fractions, vec![1.0]);
}

#[test]
fn pipeline_reruns_are_byte_identical() {
    let base = std::env::temp_dir().join(format!("qgl-determinism-{}", std::process::id()));
    let mut outputs = Vec::new();
    for (run, workers) in [(0, 1), (1, 3)] {
        let cfg = RunConfig {
            n: 3..=5,
            p: 0..=2,
            starts: 4,
            out_dir: base.join(run.to_string()),
            workers: Some(workers),
            ..Default::default()
        };
        let summary = pipeline::run(&cfg).unwrap();
        assert_eq!(summary.graphs, 2 + 6 + 21);
        outputs.push(
            summary
                .files
                .iter()
                .map(|f| (f.file_name().unwrap().to_owned(), fs::read(f).unwrap()))
                .collect::<Vec<_>>(),
        );
    }
    assert_eq!(outputs[0], outputs[1]);
    fs::remove_dir_all(&base).unwrap();
}
