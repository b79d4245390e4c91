//! Run configuration in a flat `key = value` text format.
//!
//! ```text
//! # sizes and depths are inclusive ranges
//! n = 3-6
//! p = 0-3
//! starts = 200
//! seed = 1
//! out_dir = results
//! workers = 4
//! ```

use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::qaoa::OptimizerConfig;

pub const WORKERS_ENV: &str = "QGL_WORKERS";

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub n: RangeInclusive<usize>,
    pub p: RangeInclusive<usize>,
    pub starts: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_iterations: usize,
    pub grid_resolution: usize,
    pub out_dir: PathBuf,
    /// `None` defers to the environment, then available parallelism.
    pub workers: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let opt = OptimizerConfig::default();
        Self {
            n: 3..=8,
            p: 0..=3,
            starts: opt.starts,
            seed: 1,
            tolerance: opt.tolerance,
            max_iterations: opt.max_iterations,
            grid_resolution: opt.grid_resolution,
            out_dir: PathBuf::from("out"),
            workers: None,
        }
    }
}

fn parse_range(key: &str, value: &str) -> Result<RangeInclusive<usize>> {
    let bad = || {
        Error::Config(format!(
            "`{key}` must be an integer or range `a-b`, got `{value}`"
        ))
    };
    let (lo, hi) = match value.split_once('-') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = value.parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("invalid value `{value}` for `{key}`")))
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "n" => cfg.n = parse_range(key, value)?,
                "p" => cfg.p = parse_range(key, value)?,
                "starts" => cfg.starts = parse_value(key, value)?,
                "seed" => cfg.seed = parse_value(key, value)?,
                "tolerance" => cfg.tolerance = parse_value(key, value)?,
                "max_iterations" => cfg.max_iterations = parse_value(key, value)?,
                "grid_resolution" => cfg.grid_resolution = parse_value(key, value)?,
                "out_dir" => cfg.out_dir = PathBuf::from(value),
                "workers" => cfg.workers = Some(parse_value(key, value)?),
                _ => {
                    return Err(Error::Config(format!(
                        "line {}: unknown key `{key}`",
                        lineno + 1
                    )))
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if *self.n.start() < 3 || *self.n.end() > 8 {
            return Err(Error::Config(format!("n range {:?} outside 3..=8", self.n)));
        }
        if *self.p.end() > 3 {
            return Err(Error::Config(format!("p range {:?} outside 0..=3", self.p)));
        }
        if self.starts < 1 {
            return Err(Error::Config("starts must be at least 1".into()));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::Config("tolerance must be positive".into()));
        }
        if self.max_iterations < 1 {
            return Err(Error::Config("max_iterations must be at least 1".into()));
        }
        if self.grid_resolution < 64 {
            return Err(Error::Config("grid_resolution must be at least 64".into()));
        }
        if self.workers == Some(0) {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        Ok(())
    }

    pub fn optimizer(&self) -> OptimizerConfig {
        OptimizerConfig {
            starts: self.starts,
            tolerance: self.tolerance,
            max_iterations: self.max_iterations,
            grid_resolution: self.grid_resolution,
        }
    }

    /// Worker count: `QGL_WORKERS`, then the config key, then available
    /// parallelism.
    pub fn resolve_workers(&self) -> Result<usize> {
        resolve_workers(std::env::var(WORKERS_ENV).ok().as_deref(), self.workers)
    }
}

pub fn resolve_workers(env: Option<&str>, configured: Option<usize>) -> Result<usize> {
    if let Some(v) = env.map(str::trim).filter(|v| !v.is_empty()) {
        return match v.parse::<usize>() {
            Ok(w) if w >= 1 => Ok(w),
            _ => Err(Error::Config(format!(
                "{WORKERS_ENV} must be a positive integer, got `{v}`"
            ))),
        };
    }
    if let Some(w) = configured {
        return Ok(w);
    }
    Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
}
