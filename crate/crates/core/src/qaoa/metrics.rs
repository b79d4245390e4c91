use crate::error::{Error, Result};
use crate::qaoa::optimize::{optimize_angles, OptimizerConfig, OptimizerStats, Origin, METHOD};
use crate::qaoa::sim::{AngleVector, QaoaProblem};

/// Below this gap the previous depth already reached `C_max` and the Δ ratio
/// is undefined.
pub const DELTA_GAP_EPS: f64 = 1e-9;

/// Optimized angles and performance metrics for one graph at one depth.
#[derive(Clone, Debug, PartialEq)]
pub struct QaoaOutcome {
    pub graph_id: Option<u32>,
    pub p: usize,
    pub angles: AngleVector,
    pub exp_c: f64,
    pub prob_cmax: f64,
    pub ratio: f64,
    /// `None` at depth 0 and whenever the previous depth was already optimal.
    pub delta_ratio: Option<f64>,
    pub stats: OptimizerStats,
}

impl QaoaOutcome {
    /// Outcome for `angles` without ratio bookkeeping; call [`metrics_bundle`]
    /// to fill `ratio` and `delta_ratio`.
    pub fn evaluate(problem: &QaoaProblem, angles: AngleVector, stats: OptimizerStats) -> Self {
        let sv = problem.evolve(&angles);
        Self {
            graph_id: None,
            p: angles.p(),
            exp_c: problem.expectation(&sv),
            prob_cmax: problem.prob_cmax(&sv),
            angles,
            ratio: f64::NAN,
            delta_ratio: None,
            stats,
        }
    }

    /// Depth-0 outcome: the uniform superposition.
    pub fn uniform(problem: &QaoaProblem) -> Self {
        Self::evaluate(
            problem,
            AngleVector::zeros(0),
            OptimizerStats {
                method: "none",
                starts: 0,
                best_origin: Origin::Grid,
                evaluations: 1,
            },
        )
    }
}

pub fn delta_ratio(exp_c: f64, previous: f64, cmax: f64) -> Option<f64> {
    let gap = cmax - previous;
    (gap >= DELTA_GAP_EPS).then(|| (exp_c - previous) / gap)
}

/// Fills `ratio` and `delta_ratio` for outcomes ordered by depth from 0.
pub fn metrics_bundle(cmax: u32, outcomes: &mut [QaoaOutcome]) -> Result<()> {
    let cmax = cmax as f64;
    for i in 0..outcomes.len() {
        if outcomes[i].p != i {
            return Err(Error::Sequencing(format!(
                "expected depth {i} at position {i}, found p={}",
                outcomes[i].p
            )));
        }
        let previous = (i > 0).then(|| outcomes[i - 1].exp_c);
        let o = &mut outcomes[i];
        o.ratio = o.exp_c / cmax;
        o.delta_ratio = previous.and_then(|prev| delta_ratio(o.exp_c, prev, cmax));
    }
    Ok(())
}

/// Depth 0 through `p_max` for one graph. Each depth also polishes the
/// previous optimum padded with an identity layer, so `⟨C⟩` never decreases
/// with depth.
pub fn run_depths(
    problem: &QaoaProblem,
    graph_id: Option<u32>,
    graph_key: u64,
    p_max: usize,
    config: &OptimizerConfig,
    seed: u64,
) -> Result<Vec<QaoaOutcome>> {
    let mut outcomes = vec![QaoaOutcome::uniform(problem)];
    for p in 1..=p_max {
        let previous = (p > 1).then(|| outcomes[p - 1].angles.clone());
        let opt = optimize_angles(problem, p, config, seed, graph_key, previous.as_ref())?;
        debug_assert_eq!(opt.stats.method, METHOD);
        outcomes.push(QaoaOutcome::evaluate(problem, opt.angles, opt.stats));
    }
    for o in &mut outcomes {
        o.graph_id = graph_id;
    }
    metrics_bundle(problem.maxcut().cmax, &mut outcomes)?;
    Ok(outcomes)
}
