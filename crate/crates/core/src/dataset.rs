//! CSV persistence: per-graph property rows (`graphs_n<k>.csv`) and QAOA
//! result rows.
//!
//! Files are UTF-8, comma separated, header first. List-valued fields are
//! always quoted. Reals are written with 12 significant digits.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::qaoa::{MaxCutSummary, QaoaOutcome};
use crate::structure::StructureProfile;
use crate::symmetry::AutomorphismSummary;

pub const DATASET_SCHEMA_VERSION: u32 = 1;
pub const QAOA_SCHEMA_VERSION: u32 = 1;

/// Formats a real with 12 significant digits, dropping trailing zeros.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let fixed = format!("{x:.decimals$}");
        trim_zeros(&fixed).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn quoted(s: &str) -> String {
    format!("\"{s}\"")
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// One row of the per-graph property dataset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatasetRow {
    pub graph_id: u32,
    pub n: usize,
    pub graph6: String,
    pub bipartite: bool,
    pub edges: usize,
    pub diameter: usize,
    pub clique_number: usize,
    /// Equal distance distributions at every vertex.
    pub distance_regular: bool,
    pub distance_regular_strict: bool,
    pub eulerian: bool,
    pub cut_vertices: Vec<usize>,
    pub cut_vertex_count: usize,
    pub cycle_basis: Vec<Vec<(usize, usize)>>,
    pub degree_sequence: Vec<usize>,
    pub automorphism_generators: Vec<Vec<usize>>,
    pub group_size: u64,
    pub orbits: Vec<Vec<usize>>,
    pub orbit_count: usize,
    /// Simple-cycle counts for lengths 3..=n.
    pub cycle_counts: Vec<u64>,
    pub min_odd_cycle_count: u64,
}

impl DatasetRow {
    pub fn build(
        graph: &Graph,
        profile: &StructureProfile,
        symmetry: &AutomorphismSummary,
    ) -> Result<Self> {
        Ok(Self {
            graph_id: graph.id().unwrap_or(0),
            n: graph.n(),
            graph6: graph6::encode(graph)?,
            bipartite: profile.bipartite,
            edges: profile.edges,
            diameter: profile.diameter,
            clique_number: profile.clique_number,
            distance_regular: profile.distance_regular_paperdef,
            distance_regular_strict: profile.distance_regular_strict,
            eulerian: profile.eulerian,
            cut_vertices: profile.cut_vertices.clone(),
            cut_vertex_count: profile.cut_vertex_count,
            cycle_basis: profile.cycle_basis.clone(),
            degree_sequence: profile.degree_sequence.clone(),
            automorphism_generators: symmetry.generators.clone(),
            group_size: symmetry.group_size,
            orbits: symmetry.orbits.clone(),
            orbit_count: symmetry.orbit_count,
            cycle_counts: (3..=graph.n())
                .map(|k| profile.cycle_counts.get(&k).copied().unwrap_or(0))
                .collect(),
            min_odd_cycle_count: profile.min_odd_cycle_count,
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        Ok(graph6::decode(&self.graph6)?.with_id(self.graph_id))
    }
}

pub fn dataset_header(n: usize) -> Vec<String> {
    let mut cols: Vec<String> = [
        "graph_id",
        "n",
        "graph6",
        "bipartite",
        "edges",
        "diameter",
        "clique_number",
        "distance_regular",
        "distance_regular_strict",
        "eulerian",
        "cut_vertices",
        "cut_vertex_count",
        "cycle_basis",
        "degree_sequence",
        "automorphism_generators",
        "group_size",
        "orbits",
        "orbit_count",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    cols.extend((3..=n).map(|k| format!("cycle_count_{k}")));
    cols.push("min_odd_cycle_count".into());
    cols
}

fn format_basis(basis: &[Vec<(usize, usize)>]) -> String {
    basis
        .iter()
        .map(|cycle| {
            cycle
                .iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn format_generators(gens: &[Vec<usize>]) -> String {
    gens.iter()
        .map(|g| format!("({})", join(g, " ")))
        .collect::<Vec<_>>()
        .join(";")
}

fn format_orbits(orbits: &[Vec<usize>]) -> String {
    orbits
        .iter()
        .map(|o| join(o, " "))
        .collect::<Vec<_>>()
        .join(";")
}

fn dataset_line(row: &DatasetRow) -> String {
    let mut fields = vec![
        row.graph_id.to_string(),
        row.n.to_string(),
        row.graph6.clone(),
        row.bipartite.to_string(),
        row.edges.to_string(),
        row.diameter.to_string(),
        row.clique_number.to_string(),
        row.distance_regular.to_string(),
        row.distance_regular_strict.to_string(),
        row.eulerian.to_string(),
        quoted(&join(&row.cut_vertices, " ")),
        row.cut_vertex_count.to_string(),
        quoted(&format_basis(&row.cycle_basis)),
        quoted(&join(&row.degree_sequence, " ")),
        quoted(&format_generators(&row.automorphism_generators)),
        row.group_size.to_string(),
        quoted(&format_orbits(&row.orbits)),
        row.orbit_count.to_string(),
    ];
    fields.extend(row.cycle_counts.iter().map(u64::to_string));
    fields.push(row.min_odd_cycle_count.to_string());
    fields.join(",")
}

/// Writes the rows (all for the same `n`) with a header.
pub fn write_dataset<W: Write>(mut w: W, rows: &[DatasetRow]) -> Result<()> {
    let n = rows.first().map_or(0, |r| r.n);
    if let Some(bad) = rows.iter().find(|r| r.n != n) {
        return Err(Error::Parameter(format!(
            "dataset rows must share n={n}; graph {} has n={}",
            bad.graph_id, bad.n
        )));
    }
    writeln!(w, "{}", dataset_header(n).join(","))?;
    for row in rows {
        writeln!(w, "{}", dataset_line(row))?;
    }
    Ok(())
}

pub fn dataset_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("graphs_n{n}.csv"))
}

pub fn write_dataset_file(dir: &Path, rows: &[DatasetRow]) -> Result<PathBuf> {
    let n = rows.first().map_or(0, |r| r.n);
    let path = dataset_path(dir, n);
    let mut w = BufWriter::new(File::create(&path)?);
    write_dataset(&mut w, rows)?;
    w.flush()?;
    Ok(path)
}

fn schema_error(version: u32, column: &str, detail: impl Into<String>) -> Error {
    Error::Schema {
        version,
        column: column.to_string(),
        detail: detail.into(),
    }
}

struct Fields<'a> {
    record: &'a csv::StringRecord,
    header: &'a [String],
    version: u32,
}

impl Fields<'_> {
    fn raw(&self, i: usize) -> &str {
        self.record.get(i).unwrap_or("")
    }

    fn parse<T: std::str::FromStr>(&self, i: usize) -> Result<T> {
        let s = self.raw(i);
        s.trim()
            .parse()
            .map_err(|_| schema_error(self.version, &self.header[i], format!("cannot parse `{s}`")))
    }

    fn list<T: std::str::FromStr>(&self, i: usize, sep: char, s: &str) -> Result<Vec<T>> {
        s.split(sep)
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim().parse().map_err(|_| {
                    schema_error(
                        self.version,
                        &self.header[i],
                        format!("bad list item `{t}`"),
                    )
                })
            })
            .collect()
    }

    fn bad(&self, i: usize, detail: &str) -> Error {
        schema_error(self.version, &self.header[i], detail)
    }
}

fn check_header(found: &csv::StringRecord, expected: &[String], version: u32) -> Result<()> {
    for (i, want) in expected.iter().enumerate() {
        match found.get(i) {
            Some(got) if got == want => {}
            Some(got) => {
                return Err(schema_error(
                    version,
                    want,
                    format!("header has `{got}` at position {i}"),
                ))
            }
            None => return Err(schema_error(version, want, "missing column")),
        }
    }
    if let Some(extra) = found.get(expected.len()) {
        return Err(schema_error(version, extra, "unexpected column"));
    }
    Ok(())
}

pub fn read_dataset<R: Read>(reader: R) -> Result<Vec<DatasetRow>> {
    let v = DATASET_SCHEMA_VERSION;
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);
    let found = rdr.headers()?.clone();
    // the number of cycle-count columns fixes n
    let cycle_cols = found
        .iter()
        .filter(|c| c.starts_with("cycle_count_"))
        .count();
    let n = cycle_cols + 2;
    let header = dataset_header(n);
    check_header(&found, &header, v)?;

    let mut rows = Vec::new();
    for record in rdr.records() {
        let record = record?;
        if record.len() != header.len() {
            let col = header.get(record.len()).map_or("<end>", String::as_str);
            return Err(schema_error(
                v,
                col,
                format!("row has {} fields", record.len()),
            ));
        }
        let f = Fields {
            record: &record,
            header: &header,
            version: v,
        };
        let row_n: usize = f.parse(1)?;
        if row_n != n {
            return Err(f.bad(1, &format!("row n={row_n} but header implies n={n}")));
        }
        let basis = f
            .raw(12)
            .split(';')
            .filter(|c| !c.trim().is_empty())
            .map(|cycle| {
                cycle
                    .split_whitespace()
                    .map(|e| {
                        let (a, b) = e
                            .split_once('-')
                            .ok_or_else(|| f.bad(12, "edge without `-`"))?;
                        Ok((
                            a.parse().map_err(|_| f.bad(12, "bad vertex"))?,
                            b.parse().map_err(|_| f.bad(12, "bad vertex"))?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let generators = f
            .raw(14)
            .split(';')
            .filter(|g| !g.trim().is_empty())
            .map(|g| {
                let inner = g
                    .trim()
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| f.bad(14, "generator must be parenthesized"))?;
                f.list(14, ' ', inner)
            })
            .collect::<Result<Vec<_>>>()?;
        let orbits = f
            .raw(16)
            .split(';')
            .filter(|o| !o.trim().is_empty())
            .map(|o| f.list(16, ' ', o))
            .collect::<Result<Vec<_>>>()?;
        let cycle_counts = (0..cycle_cols)
            .map(|k| f.parse(18 + k))
            .collect::<Result<Vec<u64>>>()?;
        rows.push(DatasetRow {
            graph_id: f.parse(0)?,
            n,
            graph6: f.raw(2).to_string(),
            bipartite: f.parse(3)?,
            edges: f.parse(4)?,
            diameter: f.parse(5)?,
            clique_number: f.parse(6)?,
            distance_regular: f.parse(7)?,
            distance_regular_strict: f.parse(8)?,
            eulerian: f.parse(9)?,
            cut_vertices: f.list(10, ' ', f.raw(10))?,
            cut_vertex_count: f.parse(11)?,
            cycle_basis: basis,
            degree_sequence: f.list(13, ' ', f.raw(13))?,
            automorphism_generators: generators,
            group_size: f.parse(15)?,
            orbits,
            orbit_count: f.parse(17)?,
            cycle_counts,
            min_odd_cycle_count: f.parse(18 + cycle_cols)?,
        });
    }
    Ok(rows)
}

pub fn read_dataset_file(path: &Path) -> Result<Vec<DatasetRow>> {
    read_dataset(File::open(path)?)
}

/// One QAOA result row for one graph at one depth.
#[derive(Clone, Debug, PartialEq)]
pub struct QaoaRow {
    pub graph_id: u32,
    pub n: usize,
    pub graph6: String,
    pub p: usize,
    pub gammas: Vec<f64>,
    pub betas: Vec<f64>,
    pub exp_c: f64,
    pub prob_cmax: f64,
    pub ratio: f64,
    pub delta_ratio: Option<f64>,
    pub cmax: u32,
    pub optimal_count: u64,
    pub starts: usize,
    pub seed: u64,
}

impl QaoaRow {
    pub fn from_outcome(
        graph: &Graph,
        outcome: &QaoaOutcome,
        maxcut: &MaxCutSummary,
        seed: u64,
    ) -> Result<Self> {
        Ok(Self {
            graph_id: outcome.graph_id.or(graph.id()).unwrap_or(0),
            n: graph.n(),
            graph6: graph6::encode(graph)?,
            p: outcome.p,
            gammas: outcome.angles.gammas.clone(),
            betas: outcome.angles.betas.clone(),
            exp_c: outcome.exp_c,
            prob_cmax: outcome.prob_cmax,
            ratio: outcome.ratio,
            delta_ratio: outcome.delta_ratio,
            cmax: maxcut.cmax,
            optimal_count: maxcut.optimal_count,
            starts: outcome.stats.starts,
            seed,
        })
    }
}

pub fn qaoa_header(p_max: usize) -> Vec<String> {
    let mut cols: Vec<String> = ["graph_id", "n", "graph6", "p"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    cols.extend((1..=p_max).map(|k| format!("gamma_{k}")));
    cols.extend((1..=p_max).map(|k| format!("beta_{k}")));
    cols.extend(
        [
            "exp_c",
            "prob_cmax",
            "ratio",
            "delta_ratio",
            "cmax",
            "optimal_count",
            "starts",
            "seed",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    cols
}

pub fn write_qaoa<W: Write>(mut w: W, rows: &[QaoaRow]) -> Result<()> {
    let p_max = rows.iter().map(|r| r.p).max().unwrap_or(0);
    writeln!(w, "{}", qaoa_header(p_max).join(","))?;
    for r in rows {
        let mut fields = vec![
            r.graph_id.to_string(),
            r.n.to_string(),
            r.graph6.clone(),
            r.p.to_string(),
        ];
        for angles in [&r.gammas, &r.betas] {
            fields.extend(
                (0..p_max).map(|k| angles.get(k).map(|&a| format_real(a)).unwrap_or_default()),
            );
        }
        fields.extend([
            format_real(r.exp_c),
            format_real(r.prob_cmax),
            format_real(r.ratio),
            r.delta_ratio.map(format_real).unwrap_or_default(),
            r.cmax.to_string(),
            r.optimal_count.to_string(),
            r.starts.to_string(),
            r.seed.to_string(),
        ]);
        writeln!(w, "{}", fields.join(","))?;
    }
    Ok(())
}

pub fn write_qaoa_file(path: &Path, rows: &[QaoaRow]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_qaoa(&mut w, rows)?;
    w.flush()?;
    Ok(())
}

pub fn read_qaoa<R: Read>(reader: R) -> Result<Vec<QaoaRow>> {
    let v = QAOA_SCHEMA_VERSION;
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);
    let found = rdr.headers()?.clone();
    let p_max = found.iter().filter(|c| c.starts_with("gamma_")).count();
    let header = qaoa_header(p_max);
    check_header(&found, &header, v)?;

    let mut rows = Vec::new();
    for record in rdr.records() {
        let record = record?;
        if record.len() != header.len() {
            let col = header.get(record.len()).map_or("<end>", String::as_str);
            return Err(schema_error(
                v,
                col,
                format!("row has {} fields", record.len()),
            ));
        }
        let f = Fields {
            record: &record,
            header: &header,
            version: v,
        };
        let p: usize = f.parse(3)?;
        if p > p_max {
            return Err(f.bad(3, &format!("p={p} exceeds the {p_max} angle columns")));
        }
        let angles =
            |offset: usize| -> Result<Vec<f64>> { (0..p).map(|k| f.parse(offset + k)).collect() };
        let base = 4 + 2 * p_max;
        let delta = f.raw(base + 3).trim();
        rows.push(QaoaRow {
            graph_id: f.parse(0)?,
            n: f.parse(1)?,
            graph6: f.raw(2).to_string(),
            p,
            gammas: angles(4)?,
            betas: angles(4 + p_max)?,
            exp_c: f.parse(base)?,
            prob_cmax: f.parse(base + 1)?,
            ratio: f.parse(base + 2)?,
            delta_ratio: if delta.is_empty() {
                None
            } else {
                Some(f.parse(base + 3)?)
            },
            cmax: f.parse(base + 4)?,
            optimal_count: f.parse(base + 5)?,
            starts: f.parse(base + 6)?,
            seed: f.parse(base + 7)?,
        });
    }
    Ok(rows)
}

pub fn read_qaoa_file(path: &Path) -> Result<Vec<QaoaRow>> {
    read_qaoa(File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::StructureProfile;
    use crate::symmetry::automorphism_group;

    fn row_for(g: &Graph) -> DatasetRow {
        let profile = StructureProfile::compute(g).unwrap();
        let sym = automorphism_group(g).unwrap();
        DatasetRow::build(g, &profile, &sym).unwrap()
    }

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(2.0), "2");
        assert_eq!(format_real(0.125), "0.125");
        assert_eq!(format_real(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_real(std::f64::consts::PI), "3.14159265359");
        assert_eq!(format_real(-0.5), "-0.5");
        assert_eq!(format_real(1.5e-9), "1.5e-9");
        assert_eq!(format_real(123456.789), "123456.789");
    }

    #[test]
    fn dataset_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
            .unwrap()
            .with_id(7);
        let rows = vec![row_for(&g), row_for(&Graph::cycle(5).unwrap().with_id(8))];
        let mut buf = Vec::new();
        write_dataset(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("graph_id,n,graph6,bipartite,"));
        assert!(text.contains(",\"2 3\","));
        assert_eq!(read_dataset(&buf[..]).unwrap(), rows);
    }

    #[test]
    fn dataset_schema_errors_name_the_column() {
        let rows = vec![row_for(&Graph::cycle(4).unwrap().with_id(1))];
        let mut buf = Vec::new();
        write_dataset(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();

        let renamed = text.replacen("diameter", "diam", 1);
        match read_dataset(renamed.as_bytes()) {
            Err(Error::Schema {
                column, version, ..
            }) => {
                assert_eq!(column, "diameter");
                assert_eq!(version, DATASET_SCHEMA_VERSION);
            }
            other => panic!("expected schema error, got {other:?}"),
        }

        let corrupted = text.replacen(",true,", ",maybe,", 1);
        assert!(matches!(
            read_dataset(corrupted.as_bytes()),
            Err(Error::Schema { .. })
        ));
    }

    #[test]
    fn mixed_sizes_rejected() {
        let rows = vec![
            row_for(&Graph::cycle(4).unwrap().with_id(1)),
            row_for(&Graph::cycle(5).unwrap().with_id(1)),
        ];
        assert!(write_dataset(Vec::new(), &rows).is_err());
    }

    #[test]
    fn qaoa_round_trip_with_missing_delta() {
        let rows = vec![
            QaoaRow {
                graph_id: 3,
                n: 4,
                graph6: "Cl".into(),
                p: 0,
                gammas: vec![],
                betas: vec![],
                exp_c: 2.0,
                prob_cmax: 0.125,
                ratio: 0.5,
                delta_ratio: None,
                cmax: 4,
                optimal_count: 2,
                starts: 0,
                seed: 1,
            },
            QaoaRow {
                graph_id: 3,
                n: 4,
                graph6: "Cl".into(),
                p: 2,
                gammas: vec![0.25, 1.5],
                betas: vec![0.125, 2.75],
                exp_c: 4.0,
                prob_cmax: 1.0,
                ratio: 1.0,
                delta_ratio: Some(1.0),
                cmax: 4,
                optimal_count: 2,
                starts: 200,
                seed: 1,
            },
        ];
        let mut buf = Vec::new();
        write_qaoa(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("graph_id,n,graph6,p,gamma_1,gamma_2,beta_1,beta_2,exp_c,"));
        assert_eq!(read_qaoa(&buf[..]).unwrap(), rows);
    }
}
