//! Correlations between graph properties and QAOA metrics, subgroup
//! averages, histograms and the sign summary.
//!
//! Inputs are the persisted rows ([`DatasetRow`], [`QaoaRow`]) joined on
//! `graph_id`. Booleans enter correlations as TRUE = 1, FALSE = 0.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use crate::dataset::{format_real, DatasetRow, QaoaRow};
use crate::error::{Error, Result};

/// Graph properties correlated against QAOA metrics, in reporting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Edges,
    Diameter,
    CliqueNumber,
    Bipartite,
    Eulerian,
    /// Strict (intersection-array) distance regularity.
    DistanceRegular,
    CutVertices,
    MinOddCycles,
    GroupSize,
    Orbits,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::Edges,
        Property::Diameter,
        Property::CliqueNumber,
        Property::Bipartite,
        Property::Eulerian,
        Property::DistanceRegular,
        Property::CutVertices,
        Property::MinOddCycles,
        Property::GroupSize,
        Property::Orbits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Edges => "edges",
            Property::Diameter => "diameter",
            Property::CliqueNumber => "clique_number",
            Property::Bipartite => "bipartite",
            Property::Eulerian => "eulerian",
            Property::DistanceRegular => "distance_regular",
            Property::CutVertices => "cut_vertex_count",
            Property::MinOddCycles => "min_odd_cycle_count",
            Property::GroupSize => "group_size",
            Property::Orbits => "orbit_count",
        }
    }

    pub fn value(self, row: &DatasetRow) -> f64 {
        let b = |x: bool| if x { 1.0 } else { 0.0 };
        match self {
            Property::Edges => row.edges as f64,
            Property::Diameter => row.diameter as f64,
            Property::CliqueNumber => row.clique_number as f64,
            Property::Bipartite => b(row.bipartite),
            Property::Eulerian => b(row.eulerian),
            Property::DistanceRegular => b(row.distance_regular_strict),
            Property::CutVertices => row.cut_vertex_count as f64,
            Property::MinOddCycles => row.min_odd_cycle_count as f64,
            Property::GroupSize => row.group_size as f64,
            Property::Orbits => row.orbit_count as f64,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown property `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Metric {
    ExpC,
    ProbCmax,
    Ratio,
    DeltaRatio,
}

impl Metric {
    pub const ALL: [Metric; 4] = [
        Metric::ExpC,
        Metric::ProbCmax,
        Metric::Ratio,
        Metric::DeltaRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::ExpC => "exp_c",
            Metric::ProbCmax => "prob_cmax",
            Metric::Ratio => "ratio",
            Metric::DeltaRatio => "delta_ratio",
        }
    }

    pub fn value(self, row: &QaoaRow) -> Option<f64> {
        match self {
            Metric::ExpC => Some(row.exp_c),
            Metric::ProbCmax => Some(row.prob_cmax),
            Metric::Ratio => Some(row.ratio),
            Metric::DeltaRatio => row.delta_ratio,
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown metric `{s}`")))
    }
}

/// Boolean property splitting graphs into members and non-members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flag {
    Bipartite,
    Eulerian,
}

impl Flag {
    pub fn name(self) -> &'static str {
        match self {
            Flag::Bipartite => "bipartite",
            Flag::Eulerian => "eulerian",
        }
    }

    pub fn holds(self, row: &DatasetRow) -> bool {
        match self {
            Flag::Bipartite => row.bipartite,
            Flag::Eulerian => row.eulerian,
        }
    }
}

impl FromStr for Flag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bipartite" => Ok(Flag::Bipartite),
            "eulerian" => Ok(Flag::Eulerian),
            _ => Err(Error::Parameter(format!("unknown flag `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    Member,
    NonMember,
}

impl Polarity {
    pub fn name(self) -> &'static str {
        match self {
            Polarity::Member => "member",
            Polarity::NonMember => "non-member",
        }
    }
}

/// Pearson product-moment correlation. `None` when either side has zero
/// variance or fewer than two samples.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<Option<f64>> {
    if x.len() != y.len() {
        return Err(Error::Shape(format!(
            "pearson inputs differ in length: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    let len = x.len();
    if len < 2 || is_constant(x) || is_constant(y) {
        return Ok(None);
    }
    let m = len as f64;
    let mx = x.iter().sum::<f64>() / m;
    let my = y.iter().sum::<f64>() / m;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    let r = sxy / (sxx.sqrt() * syy.sqrt());
    Ok(Some(r.clamp(-1.0, 1.0)))
}

// Optimized metrics of graphs that all reach the optimum agree only to
// optimizer precision; treat that spread as zero variance.
fn is_constant(v: &[f64]) -> bool {
    let (lo, hi) = v
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        });
    hi - lo <= 1e-9 * hi.abs().max(1.0)
}

/// One graph's properties paired with its outcome at a fixed depth.
pub type Joined<'a> = Vec<(&'a DatasetRow, &'a QaoaRow)>;

/// Pairs every size-`n` profile with its depth-`p` outcome.
pub fn join<'a>(
    profiles: &'a [DatasetRow],
    outcomes: &'a [QaoaRow],
    n: usize,
    p: usize,
) -> Result<Joined<'a>> {
    let mut by_id: BTreeMap<u32, &QaoaRow> = BTreeMap::new();
    for o in outcomes.iter().filter(|o| o.n == n && o.p == p) {
        if by_id.insert(o.graph_id, o).is_some() {
            return Err(Error::Shape(format!(
                "duplicate outcome for graph {} at n={n}, p={p}",
                o.graph_id
            )));
        }
    }
    let graphs: Vec<&DatasetRow> = profiles.iter().filter(|r| r.n == n).collect();
    if graphs.is_empty() {
        return Err(Error::Parameter(format!("no graph profiles with n={n}")));
    }
    let mut missing: Vec<u32> = graphs
        .iter()
        .filter(|g| !by_id.contains_key(&g.graph_id))
        .map(|g| g.graph_id)
        .collect();
    // outcomes for graphs that have no profile are just as incomplete
    missing.extend(
        by_id
            .keys()
            .filter(|id| !graphs.iter().any(|g| g.graph_id == **id))
            .copied(),
    );
    if !missing.is_empty() {
        missing.sort_unstable();
        missing.dedup();
        return Err(Error::MissingData(missing));
    }
    Ok(graphs
        .into_iter()
        .map(|g| (g, by_id[&g.graph_id]))
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationCell {
    pub n: usize,
    pub p: usize,
    pub property: Property,
    pub metric: Metric,
    pub r: Option<f64>,
    pub sample_size: usize,
}

/// Every (property, metric) correlation for size-`n` graphs at depth `p`.
/// Graphs with an undefined Δ ratio are dropped from Δ correlations only.
pub fn correlation_table(
    profiles: &[DatasetRow],
    outcomes: &[QaoaRow],
    n: usize,
    p: usize,
) -> Result<Vec<CorrelationCell>> {
    let rows = join(profiles, outcomes, n, p)?;
    let mut cells = Vec::with_capacity(Property::ALL.len() * Metric::ALL.len());
    for property in Property::ALL {
        for metric in Metric::ALL {
            let (xs, ys): (Vec<f64>, Vec<f64>) = rows
                .iter()
                .filter_map(|(g, o)| Some((property.value(g), metric.value(o)?)))
                .unzip();
            cells.push(CorrelationCell {
                n,
                p,
                property,
                metric,
                r: pearson(&xs, &ys)?,
                sample_size: xs.len(),
            });
        }
    }
    Ok(cells)
}

/// How subgroup Δ averages treat graphs whose previous depth already
/// reached `C_max` (per-graph Δ undefined).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SaturatedDelta {
    /// The remaining gap is fully closed: count as Δ = 1.
    #[default]
    CountAsOne,
    Exclude,
}

impl FromStr for SaturatedDelta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one" | "count-as-one" => Ok(SaturatedDelta::CountAsOne),
            "exclude" => Ok(SaturatedDelta::Exclude),
            _ => Err(Error::Parameter(format!(
                "unknown saturated-delta policy `{s}`"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupAverageRow {
    pub n: usize,
    pub p: usize,
    pub flag: Flag,
    pub polarity: Polarity,
    pub count: usize,
    /// Means are `None` for an empty subgroup.
    pub mean_prob: Option<f64>,
    pub mean_exp_c: Option<f64>,
    pub mean_ratio: Option<f64>,
    /// Always `None` at depth 0.
    pub mean_delta: Option<f64>,
}

fn mean(v: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, count) = v.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    (count > 0).then(|| sum / count as f64)
}

/// Member and non-member averages of the QAOA metrics.
pub fn group_averages(
    profiles: &[DatasetRow],
    outcomes: &[QaoaRow],
    n: usize,
    p: usize,
    flag: Flag,
    policy: SaturatedDelta,
) -> Result<[GroupAverageRow; 2]> {
    let rows = join(profiles, outcomes, n, p)?;
    let summarize = |polarity: Polarity| {
        let members: Vec<&QaoaRow> = rows
            .iter()
            .filter(|(g, _)| flag.holds(g) == (polarity == Polarity::Member))
            .map(|(_, o)| *o)
            .collect();
        let delta = match (p, policy) {
            (0, _) => None,
            (_, SaturatedDelta::CountAsOne) => {
                mean(members.iter().map(|o| o.delta_ratio.unwrap_or(1.0)))
            }
            (_, SaturatedDelta::Exclude) => mean(members.iter().filter_map(|o| o.delta_ratio)),
        };
        GroupAverageRow {
            n,
            p,
            flag,
            polarity,
            count: members.len(),
            mean_prob: mean(members.iter().map(|o| o.prob_cmax)),
            mean_exp_c: mean(members.iter().map(|o| o.exp_c)),
            mean_ratio: mean(members.iter().map(|o| o.ratio)),
            mean_delta: delta,
        }
    };
    Ok([summarize(Polarity::Member), summarize(Polarity::NonMember)])
}

#[derive(Clone, Debug, PartialEq)]
pub struct HistogramGroup {
    pub label: String,
    pub count: usize,
    pub fractions: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HistogramSpec {
    pub metric: Metric,
    /// `bins + 1` uniform edges over [0, 1].
    pub edges: Vec<f64>,
    pub groups: Vec<HistogramGroup>,
}

pub const DEFAULT_BINS: usize = 20;

type Membership = Box<dyn Fn(&DatasetRow) -> bool>;

/// Per-subgroup fraction of graphs per bin. Bins are `[lo, hi)` except the
/// last, which also holds 1.0. Graphs without a metric value (undefined Δ)
/// are skipped; empty subgroups are omitted.
pub fn histogram(
    profiles: &[DatasetRow],
    outcomes: &[QaoaRow],
    n: usize,
    p: usize,
    flag: Option<Flag>,
    metric: Metric,
    bins: usize,
) -> Result<HistogramSpec> {
    if bins < 1 {
        return Err(Error::Parameter("histogram needs at least one bin".into()));
    }
    let rows = join(profiles, outcomes, n, p)?;
    let edges: Vec<f64> = (0..=bins).map(|i| i as f64 / bins as f64).collect();
    let labels: Vec<(String, Membership)> = match flag {
        None => vec![("all".to_string(), Box::new(|_: &DatasetRow| true))],
        Some(f) => vec![
            (
                f.name().to_string(),
                Box::new(move |g: &DatasetRow| f.holds(g)),
            ),
            (
                format!("non-{}", f.name()),
                Box::new(move |g: &DatasetRow| !f.holds(g)),
            ),
        ],
    };
    let mut groups = Vec::new();
    for (label, member) in labels {
        let mut counts = vec![0usize; bins];
        for (_, o) in rows.iter().filter(|(g, _)| member(g)) {
            if let Some(v) = metric.value(o) {
                let idx = (v * bins as f64).floor().clamp(0.0, (bins - 1) as f64) as usize;
                counts[idx] += 1;
            }
        }
        let total: usize = counts.iter().sum();
        if total == 0 {
            continue;
        }
        groups.push(HistogramGroup {
            label,
            count: total,
            fractions: counts.iter().map(|&c| c as f64 / total as f64).collect(),
        });
    }
    Ok(HistogramSpec {
        metric,
        edges,
        groups,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    Blank,
}

impl Sign {
    pub const THRESHOLD: f64 = 0.1;

    pub fn of(mean: Option<f64>) -> Sign {
        match mean {
            Some(m) if m >= Self::THRESHOLD => Sign::Plus,
            Some(m) if m <= -Self::THRESHOLD => Sign::Minus,
            _ => Sign::Blank,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Blank => "",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SignCell {
    pub property: Property,
    pub metric: Metric,
    pub mean_r: Option<f64>,
    pub sign: Sign,
}

/// Mean correlation over depths p ≥ 1 per (property, metric), NA excluded.
pub fn sign_summary(cells: &[CorrelationCell]) -> Vec<SignCell> {
    let mut out = Vec::new();
    for property in Property::ALL {
        for metric in Metric::ALL {
            let mean_r = mean(
                cells
                    .iter()
                    .filter(|c| c.p >= 1 && c.property == property && c.metric == metric)
                    .filter_map(|c| c.r),
            );
            out.push(SignCell {
                property,
                metric,
                mean_r,
                sign: Sign::of(mean_r),
            });
        }
    }
    out
}

fn opt(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_else(|| "NA".into())
}

pub fn write_correlations<W: Write>(mut w: W, cells: &[CorrelationCell]) -> Result<()> {
    writeln!(w, "n,p,property,metric,r,sample_size")?;
    for c in cells {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            c.n,
            c.p,
            c.property,
            c.metric,
            opt(c.r),
            c.sample_size
        )?;
    }
    Ok(())
}

pub fn write_averages<W: Write>(mut w: W, rows: &[GroupAverageRow]) -> Result<()> {
    writeln!(
        w,
        "n,p,flag,polarity,count,mean_prob,mean_exp_c,mean_ratio,mean_delta"
    )?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{}",
            r.n,
            r.p,
            r.flag.name(),
            r.polarity.name(),
            r.count,
            opt(r.mean_prob),
            opt(r.mean_exp_c),
            opt(r.mean_ratio),
            opt(r.mean_delta)
        )?;
    }
    Ok(())
}

pub fn write_histogram<W: Write>(mut w: W, spec: &HistogramSpec) -> Result<()> {
    writeln!(w, "bin_lo,bin_hi,subgroup,fraction")?;
    for g in &spec.groups {
        for (i, f) in g.fractions.iter().enumerate() {
            writeln!(
                w,
                "{},{},{},{}",
                format_real(spec.edges[i]),
                format_real(spec.edges[i + 1]),
                g.label,
                format_real(*f)
            )?;
        }
    }
    Ok(())
}

pub fn write_signs<W: Write>(mut w: W, cells: &[SignCell]) -> Result<()> {
    writeln!(w, "property,metric,mean_r,sign")?;
    for c in cells {
        writeln!(
            w,
            "{},{},{},{}",
            c.property,
            c.metric,
            opt(c.mean_r),
            c.sign.symbol()
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(id: u32, edges: usize, bipartite: bool) -> DatasetRow {
        DatasetRow {
            graph_id: id,
            n: 4,
            graph6: String::new(),
            bipartite,
            edges,
            diameter: 1,
            clique_number: 2,
            distance_regular: false,
            distance_regular_strict: false,
            eulerian: !bipartite,
            cut_vertices: vec![],
            cut_vertex_count: 0,
            cycle_basis: vec![],
            degree_sequence: vec![],
            automorphism_generators: vec![],
            group_size: 1,
            orbits: vec![],
            orbit_count: 4,
            cycle_counts: vec![0, 0],
            min_odd_cycle_count: 0,
        }
    }

    fn outcome(id: u32, p: usize, exp_c: f64, delta: Option<f64>) -> QaoaRow {
        QaoaRow {
            graph_id: id,
            n: 4,
            graph6: String::new(),
            p,
            gammas: vec![0.0; p],
            betas: vec![0.0; p],
            exp_c,
            prob_cmax: exp_c / 10.0,
            ratio: exp_c / 5.0,
            delta_ratio: delta,
            cmax: 5,
            optimal_count: 2,
            starts: 1,
            seed: 0,
        }
    }

    #[test]
    fn pearson_examples() {
        let x = [1.0, 2.0, 3.0];
        assert!((pearson(&x, &x).unwrap().unwrap() - 1.0).abs() < 1e-12);
        let r = pearson(&x, &[1.0, 2.0, 4.0]).unwrap().unwrap();
        assert!((r - 0.9820).abs() < 1e-4);
        assert_eq!(pearson(&[2.0, 2.0, 2.0], &x).unwrap(), None);
        assert_eq!(pearson(&[1.0], &[1.0]).unwrap(), None);
        assert!(matches!(pearson(&x, &[1.0]), Err(Error::Shape(_))));
    }

    #[test]
    fn delta_correlations_drop_missing_pairwise() {
        let profiles: Vec<_> = (1..=4)
            .map(|i| profile(i, i as usize + 2, i % 2 == 0))
            .collect();
        let outcomes = vec![
            outcome(1, 1, 2.0, Some(0.2)),
            outcome(2, 1, 3.0, Some(0.5)),
            outcome(3, 1, 4.0, None),
            outcome(4, 1, 5.0, Some(0.9)),
        ];
        let cells = correlation_table(&profiles, &outcomes, 4, 1).unwrap();
        assert_eq!(cells.len(), 40);
        let get = |p: Property, m: Metric| {
            cells
                .iter()
                .find(|c| c.property == p && c.metric == m)
                .unwrap()
        };
        assert_eq!(get(Property::Edges, Metric::ExpC).sample_size, 4);
        assert!((get(Property::Edges, Metric::ExpC).r.unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(get(Property::Edges, Metric::DeltaRatio).sample_size, 3);
        assert_eq!(get(Property::Diameter, Metric::ExpC).r, None);
    }

    #[test]
    fn missing_outcomes_are_listed() {
        let profiles: Vec<_> = (1..=3).map(|i| profile(i, 3, false)).collect();
        let outcomes = vec![outcome(2, 0, 1.0, None)];
        match correlation_table(&profiles, &outcomes, 4, 0) {
            Err(Error::MissingData(ids)) => assert_eq!(ids, vec![1, 3]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn averages_and_saturation_policy() {
        let profiles = vec![
            profile(1, 3, true),
            profile(2, 4, true),
            profile(3, 5, false),
        ];
        let outcomes = vec![
            outcome(1, 2, 3.0, Some(0.5)),
            outcome(2, 2, 4.0, None),
            outcome(3, 2, 5.0, Some(0.25)),
        ];
        let [b, nb] = group_averages(
            &profiles,
            &outcomes,
            4,
            2,
            Flag::Bipartite,
            SaturatedDelta::CountAsOne,
        )
        .unwrap();
        assert_eq!((b.count, nb.count), (2, 1));
        assert_eq!(b.mean_exp_c, Some(3.5));
        assert_eq!(b.mean_delta, Some(0.75));
        assert_eq!(nb.mean_delta, Some(0.25));
        let [b, _] = group_averages(
            &profiles,
            &outcomes,
            4,
            2,
            Flag::Bipartite,
            SaturatedDelta::Exclude,
        )
        .unwrap();
        assert_eq!(b.mean_delta, Some(0.5));
    }

    #[test]
    fn histogram_counts_one_in_last_bin() {
        let profiles: Vec<_> = (1..=4).map(|i| profile(i, 3, i <= 2)).collect();
        let mut outcomes: Vec<_> = (1..=4).map(|i| outcome(i, 1, 1.0, None)).collect();
        outcomes[0].prob_cmax = 1.0;
        outcomes[1].prob_cmax = 0.0;
        outcomes[2].prob_cmax = 0.5;
        outcomes[3].prob_cmax = 0.5;
        let h = histogram(
            &profiles,
            &outcomes,
            4,
            1,
            Some(Flag::Bipartite),
            Metric::ProbCmax,
            4,
        )
        .unwrap();
        assert_eq!(h.edges, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(h.groups[0].fractions, vec![0.5, 0.0, 0.0, 0.5]);
        assert_eq!(h.groups[1].fractions, vec![0.0, 0.0, 1.0, 0.0]);
        assert!(histogram(&profiles, &outcomes, 4, 1, None, Metric::ProbCmax, 0).is_err());
    }

    #[test]
    fn sign_thresholds() {
        assert_eq!(Sign::of(Some(0.05)), Sign::Blank);
        assert_eq!(Sign::of(Some(0.1)), Sign::Plus);
        assert_eq!(Sign::of(Some(-0.2)), Sign::Minus);
        assert_eq!(Sign::of(None), Sign::Blank);
        let cell = |p, r| CorrelationCell {
            n: 8,
            p,
            property: Property::Edges,
            metric: Metric::ExpC,
            r,
            sample_size: 10,
        };
        let summary = sign_summary(&[
            cell(0, Some(-1.0)),
            cell(1, Some(0.3)),
            cell(2, None),
            cell(3, Some(0.1)),
        ]);
        let edges = &summary[0];
        assert!((edges.mean_r.unwrap() - 0.2).abs() < 1e-12);
        assert_eq!(edges.sign, Sign::Plus);
    }
}
