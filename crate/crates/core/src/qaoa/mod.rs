//! Exact MaxCut, QAOA statevector simulation, angle optimization and the
//! per-graph performance metrics.

pub mod maxcut;
pub mod metrics;
pub mod optimize;
pub mod sim;

pub use maxcut::{cost_vector, maxcut_bruteforce, MaxCutSummary};
pub use metrics::{metrics_bundle, run_depths, QaoaOutcome};
pub use optimize::{grid_scan_p1, optimize_angles, OptimizerConfig, OptimizerStats, Origin};
pub use sim::{AngleVector, QaoaProblem, Statevector};
