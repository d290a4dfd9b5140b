use std::path::PathBuf;

pub use crate::graph::SolverConfig;

pub const DEFAULT_SIZE_BUDGET: usize = 1_000_000;

/// Every knob a run depends on; echoed into output headers.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub solver: SolverConfig,
    /// Largest vertex count any construction may produce.
    pub size_budget: usize,
    pub output_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            solver: SolverConfig::default(),
            size_budget: DEFAULT_SIZE_BUDGET,
            output_dir: None,
        }
    }
}

impl RunConfig {
    /// `key: value` lines recording the configuration.
    pub fn provenance(&self) -> Vec<String> {
        vec![
            format!("seed: {}", self.solver.seed),
            format!("tolerance: {:e}", self.solver.tolerance),
            format!("dense_threshold: {}", self.solver.dense_threshold),
            format!("size_budget: {}", self.size_budget),
        ]
    }
}
