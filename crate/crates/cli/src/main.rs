use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qgl_core::analysis::{self, Flag, Metric, SaturatedDelta};
use qgl_core::canon::enumerate_connected;
use qgl_core::config::{resolve_workers, RunConfig, WORKERS_ENV};
use qgl_core::dataset::{self, DatasetRow, QaoaRow};
use qgl_core::qaoa::OptimizerConfig;
use qgl_core::verify::{run_suite, Suite, VerifyOptions};
use qgl_core::{graph6, pipeline, Error, Graph};

#[derive(Parser)]
#[command(
    name = "qgl",
    version,
    about = "Small-graph structure versus QAOA MaxCut performance"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate connected graphs.
    #[command(subcommand)]
    Graphs(GraphsCmd),
    /// Structural and symmetry profile of every graph in a graph6 file.
    Props {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Optimized QAOA for depths 0..=P on every graph in a graph6 file.
    Qaoa {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        p: u8,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        starts: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Correlations, subgroup averages, histograms and sign summaries.
    Analyze {
        #[arg(value_enum)]
        kind: AnalyzeKind,
        #[command(flatten)]
        opts: AnalyzeOpts,
    },
    /// Run an acceptance suite; exits 1 if any criterion fails.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 200)]
        starts: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Run the whole pipeline described by a key=value config file.
    Pipeline {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Subcommand)]
enum GraphsCmd {
    /// Write every connected graph on K vertices as graph6 lines.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the number of connected graphs on K vertices.
    Count {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalyzeKind {
    Corr,
    Avg,
    Hist,
    Signs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Golden,
    Invariants,
    Full,
    Long,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlagArg {
    Bipartite,
    Eulerian,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    ExpC,
    ProbCmax,
    Ratio,
    DeltaRatio,
}

#[derive(Clone, Copy, ValueEnum)]
enum SaturatedArg {
    /// Graphs already optimal at p-1 count as Δ = 1.
    One,
    /// Graphs already optimal at p-1 are left out of Δ averages.
    Exclude,
}

#[derive(Args)]
struct AnalyzeOpts {
    #[arg(long)]
    props: PathBuf,
    #[arg(long)]
    qaoa: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Subgroup flag; averages default to both.
    #[arg(long, value_enum)]
    flag: Option<FlagArg>,
    #[arg(long, default_value_t = analysis::DEFAULT_BINS)]
    bins: usize,
    /// Histogram metric.
    #[arg(long, value_enum, default_value = "prob-cmax")]
    metric: MetricArg,
    /// Restrict to one graph size.
    #[arg(long)]
    n: Option<usize>,
    /// Histogram depth (defaults to the deepest in the QAOA file).
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, value_enum, default_value = "one")]
    saturated_delta: SaturatedArg,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<Error>() {
            return match e {
                Error::Parameter(_)
                | Error::Config(_)
                | Error::UnsupportedSize(_)
                | Error::UnsupportedDepth(_) => 2,
                Error::MissingData(_) => 3,
                Error::Io(io) if io.kind() == io::ErrorKind::NotFound => 3,
                _ => 1,
            };
        }
        if let Some(io) = cause.downcast_ref::<io::Error>() {
            if io.kind() == io::ErrorKind::NotFound {
                return 3;
            }
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn workers(flag: Option<usize>) -> anyhow::Result<usize> {
    if flag == Some(0) {
        return Err(Error::Parameter("--workers must be at least 1".into()).into());
    }
    Ok(resolve_workers(
        std::env::var(WORKERS_ENV).ok().as_deref(),
        flag,
    )?)
}

fn require(path: &Path) -> anyhow::Result<()> {
    if !path.exists() {
        return Err(Error::Io(io::Error::new(
            io::ErrorKind::NotFound,
            format!("input file {} does not exist", path.display()),
        ))
        .into());
    }
    Ok(())
}

/// Graphs from a graph6 file, numbered from 1 in file order.
fn read_graphs(path: &Path) -> anyhow::Result<Vec<Graph>> {
    require(path)?;
    let graphs = graph6::read_all(BufReader::new(File::open(path)?))
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.with_id(i as u32 + 1))
        .collect())
}

fn create(path: &Path) -> anyhow::Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    ))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Graphs(GraphsCmd::Count { n }) => {
            println!("{}", enumerate_connected(n)?.len());
        }
        Command::Graphs(GraphsCmd::Gen { n, out }) => {
            let graphs = enumerate_connected(n)?;
            match out {
                Some(path) => {
                    let mut w = create(&path)?;
                    graph6::write_all(&mut w, &graphs)?;
                    w.flush()?;
                }
                None => graph6::write_all(io::stdout().lock(), &graphs)?,
            }
        }
        Command::Props {
            input,
            out,
            workers: w,
        } => {
            let graphs = read_graphs(&input)?;
            let rows = pipeline::profile_rows(&graphs, workers(w)?)?;
            let sizes: BTreeSet<usize> = rows.iter().map(|r| r.n).collect();
            if sizes.len() > 1 {
                bail!(Error::Parameter(format!(
                    "graph6 input mixes sizes {sizes:?}; a dataset file holds one size"
                )));
            }
            let mut f = create(&out)?;
            dataset::write_dataset(&mut f, &rows)?;
            f.flush()?;
        }
        Command::Qaoa {
            input,
            p,
            starts,
            seed,
            out,
            workers: w,
        } => {
            let graphs = read_graphs(&input)?;
            let config = OptimizerConfig {
                starts: starts as usize,
                ..Default::default()
            };
            let rows = pipeline::qaoa_rows(&graphs, p as usize, &config, seed, workers(w)?)?;
            let mut f = create(&out)?;
            dataset::write_qaoa(&mut f, &rows)?;
            f.flush()?;
        }
        Command::Analyze { kind, opts } => analyze(kind, &opts)?,
        Command::Verify {
            suite,
            starts,
            seed,
            workers: w,
        } => {
            if starts == 0 {
                bail!(Error::Parameter("--starts must be at least 1".into()));
            }
            let suite = match suite {
                SuiteArg::Golden => Suite::Golden,
                SuiteArg::Invariants => Suite::Invariants,
                SuiteArg::Full => Suite::Full,
                SuiteArg::Long => Suite::Long,
            };
            let opts = VerifyOptions {
                optimizer: OptimizerConfig {
                    starts,
                    ..Default::default()
                },
                seed,
                workers: workers(w)?,
                ..Default::default()
            };
            let reports = run_suite(suite, &opts)?;
            let mut ok = true;
            for r in &reports {
                println!("{}", r.render());
                ok &= r.passed();
            }
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Pipeline { config } => {
            require(&config)?;
            let cfg = RunConfig::load(&config)?;
            let summary = pipeline::run(&cfg)?;
            for f in &summary.files {
                println!("{}", f.display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn analyze(kind: AnalyzeKind, opts: &AnalyzeOpts) -> anyhow::Result<()> {
    require(&opts.props)?;
    require(&opts.qaoa)?;
    let profiles: Vec<DatasetRow> = dataset::read_dataset_file(&opts.props)
        .with_context(|| format!("reading {}", opts.props.display()))?;
    let outcomes: Vec<QaoaRow> = dataset::read_qaoa_file(&opts.qaoa)
        .with_context(|| format!("reading {}", opts.qaoa.display()))?;
    let sizes: Vec<usize> = match opts.n {
        Some(n) => vec![n],
        None => profiles
            .iter()
            .map(|r| r.n)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    };
    let depths = |n: usize| -> BTreeSet<usize> {
        outcomes.iter().filter(|o| o.n == n).map(|o| o.p).collect()
    };
    let flags: Vec<Flag> = match opts.flag {
        Some(FlagArg::Bipartite) => vec![Flag::Bipartite],
        Some(FlagArg::Eulerian) => vec![Flag::Eulerian],
        None => vec![Flag::Bipartite, Flag::Eulerian],
    };
    let mut out = create(&opts.out)?;
    match kind {
        AnalyzeKind::Corr => {
            let mut cells = Vec::new();
            for &n in &sizes {
                for p in depths(n) {
                    cells.extend(analysis::correlation_table(&profiles, &outcomes, n, p)?);
                }
            }
            analysis::write_correlations(&mut out, &cells)?;
        }
        AnalyzeKind::Avg => {
            let policy = match opts.saturated_delta {
                SaturatedArg::One => SaturatedDelta::CountAsOne,
                SaturatedArg::Exclude => SaturatedDelta::Exclude,
            };
            let mut rows = Vec::new();
            for &n in &sizes {
                for p in depths(n) {
                    for &flag in &flags {
                        rows.extend(analysis::group_averages(
                            &profiles, &outcomes, n, p, flag, policy,
                        )?);
                    }
                }
            }
            analysis::write_averages(&mut out, &rows)?;
        }
        AnalyzeKind::Hist => {
            let [n] = sizes[..] else {
                bail!(Error::Parameter(format!(
                    "histogram needs a single size; pass --n (found {sizes:?})"
                )));
            };
            let p = match opts.p {
                Some(p) => p,
                None => *depths(n)
                    .iter()
                    .next_back()
                    .ok_or_else(|| Error::MissingData(vec![]))?,
            };
            let flag = opts.flag.map(|f| match f {
                FlagArg::Bipartite => Flag::Bipartite,
                FlagArg::Eulerian => Flag::Eulerian,
            });
            let metric = match opts.metric {
                MetricArg::ExpC => Metric::ExpC,
                MetricArg::ProbCmax => Metric::ProbCmax,
                MetricArg::Ratio => Metric::Ratio,
                MetricArg::DeltaRatio => Metric::DeltaRatio,
            };
            let spec = analysis::histogram(&profiles, &outcomes, n, p, flag, metric, opts.bins)?;
            analysis::write_histogram(&mut out, &spec)?;
        }
        AnalyzeKind::Signs => {
            let [n] = sizes[..] else {
                bail!(Error::Parameter(format!(
                    "sign summary needs a single size; pass --n (found {sizes:?})"
                )));
            };
            let mut cells = Vec::new();
            for p in depths(n).into_iter().filter(|&p| p >= 1) {
                cells.extend(analysis::correlation_table(&profiles, &outcomes, n, p)?);
            }
            analysis::write_signs(&mut out, &analysis::sign_summary(&cells))?;
        }
    }
    out.flush()?;
    Ok(())
}
