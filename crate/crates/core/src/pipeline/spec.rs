use std::fmt;
use std::str::FromStr;

use super::{build, plan, ConstructionPlan, PlanError, Strategy};
use crate::constructions::{
    complete_graph, cycle_graph, hypercube, lps_graph, paley_graph, petersen_graph, random_regular, LpsParameters,
};
use crate::graph::{augment_iterated, GraphError, RegularGraph};
use crate::Result;

/// Average degree allowed per budgeted vertex, bounding adjacency storage.
const DEGREE_ALLOWANCE: u128 = 64;

/// A textual graph recipe, e.g. `paley:13`, `lps:5,13`, `aug:2:complete:4`
/// or `pipeline:8,lps,1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Complete(usize),
    Cycle(usize),
    Paley(u64),
    Lps { p: u64, q: u64 },
    Hypercube(u32),
    Petersen,
    Random { n: usize, k: u32, seed: u64 },
    Pipeline { k: u32, strategy: Strategy, m: usize },
    Augmented { steps: u32, inner: Box<GraphSpec> },
}

fn bad(spec: &str, reason: impl Into<String>) -> PlanError {
    PlanError::BadSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn number<T: FromStr>(spec: &str, field: &str) -> Result<T, PlanError> {
    field
        .trim()
        .parse()
        .map_err(|_| bad(spec, format!("{field:?} is not a valid number")))
}

fn fields<'a>(spec: &str, args: &'a str, count: usize) -> Result<Vec<&'a str>, PlanError> {
    let parts: Vec<&str> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',').collect()
    };
    if parts.len() != count {
        return Err(bad(
            spec,
            format!("expected {count} comma-separated parameter(s), got {}", parts.len()),
        ));
    }
    Ok(parts)
}

impl FromStr for GraphSpec {
    type Err = PlanError;

    fn from_str(spec: &str) -> Result<Self, PlanError> {
        let spec = spec.trim();
        let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
        Ok(match name.to_ascii_lowercase().as_str() {
            "complete" => GraphSpec::Complete(number(spec, fields(spec, args, 1)?[0])?),
            "cycle" => GraphSpec::Cycle(number(spec, fields(spec, args, 1)?[0])?),
            "paley" => GraphSpec::Paley(number(spec, fields(spec, args, 1)?[0])?),
            "hypercube" => GraphSpec::Hypercube(number(spec, fields(spec, args, 1)?[0])?),
            "petersen" => {
                fields(spec, args, 0)?;
                GraphSpec::Petersen
            }
            "lps" => {
                let f = fields(spec, args, 2)?;
                GraphSpec::Lps {
                    p: number(spec, f[0])?,
                    q: number(spec, f[1])?,
                }
            }
            "random" => {
                let f = fields(spec, args, 3)?;
                GraphSpec::Random {
                    n: number(spec, f[0])?,
                    k: number(spec, f[1])?,
                    seed: number(spec, f[2])?,
                }
            }
            "pipeline" => {
                let f = fields(spec, args, 3)?;
                GraphSpec::Pipeline {
                    k: number(spec, f[0])?,
                    strategy: f[1].trim().parse()?,
                    m: number(spec, f[2])?,
                }
            }
            "aug" => {
                let (steps, inner) = args
                    .split_once(':')
                    .ok_or_else(|| bad(spec, "expected aug:<steps>:<spec>"))?;
                GraphSpec::Augmented {
                    steps: number(spec, steps)?,
                    inner: Box::new(inner.parse()?),
                }
            }
            _ => return Err(bad(spec, format!("unknown constructor {name:?}"))),
        })
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(m) => write!(f, "complete:{m}"),
            GraphSpec::Cycle(m) => write!(f, "cycle:{m}"),
            GraphSpec::Paley(q) => write!(f, "paley:{q}"),
            GraphSpec::Lps { p, q } => write!(f, "lps:{p},{q}"),
            GraphSpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            GraphSpec::Petersen => f.write_str("petersen"),
            GraphSpec::Random { n, k, seed } => write!(f, "random:{n},{k},{seed}"),
            GraphSpec::Pipeline { k, strategy, m } => write!(f, "pipeline:{k},{strategy},{m}"),
            GraphSpec::Augmented { steps, inner } => write!(f, "aug:{steps}:{inner}"),
        }
    }
}

impl GraphSpec {
    /// The plan behind a `pipeline:` spec.
    pub fn plan(&self, size_budget: usize) -> Option<Result<ConstructionPlan>> {
        match self {
            GraphSpec::Pipeline { k, strategy, .. } => Some(plan(*k, *strategy, size_budget)),
            _ => None,
        }
    }

    /// `(vertices, degree)` of the described graph, validating parameters.
    fn shape(&self) -> Result<(u128, u128)> {
        Ok(match self {
            GraphSpec::Complete(m) => (*m as u128, (*m as u128).saturating_sub(1)),
            GraphSpec::Cycle(m) => (*m as u128, 2),
            GraphSpec::Paley(q) => (u128::from(*q), u128::from(*q / 2)),
            GraphSpec::Lps { p, q } => {
                let params = LpsParameters::new(*p, *q)?;
                (u128::from(params.vertex_count()), u128::from(params.degree()))
            }
            GraphSpec::Hypercube(d) => (1u128.checked_shl(*d).unwrap_or(u128::MAX), u128::from(*d)),
            GraphSpec::Petersen => (10, 3),
            GraphSpec::Random { n, k, .. } => (*n as u128, u128::from(*k)),
            // planning checks the budget itself
            GraphSpec::Pipeline { .. } => (0, 0),
            GraphSpec::Augmented { steps, inner } => {
                let (n, k) = inner.shape()?;
                (
                    n.checked_shl(*steps).filter(|v| v >> steps == n).unwrap_or(u128::MAX),
                    k + u128::from(*steps),
                )
            }
        })
    }

    pub fn build(&self, size_budget: usize) -> Result<RegularGraph> {
        let (n, k) = self.shape()?;
        let budget = size_budget as u128;
        if n > budget || n.saturating_mul(k) > budget.saturating_mul(DEGREE_ALLOWANCE) {
            return Err(GraphError::BudgetExceeded {
                requested: n,
                budget: size_budget,
            }
            .into());
        }
        Ok(match self {
            GraphSpec::Complete(m) => complete_graph(*m)?,
            GraphSpec::Cycle(m) => cycle_graph(*m)?,
            GraphSpec::Paley(q) => paley_graph(*q)?,
            GraphSpec::Lps { p, q } => lps_graph(&LpsParameters::new(*p, *q)?)?,
            GraphSpec::Hypercube(d) => hypercube(*d)?,
            GraphSpec::Petersen => petersen_graph(),
            GraphSpec::Random { n, k, seed } => random_regular(*n, *k, *seed)?,
            GraphSpec::Pipeline { k, strategy, m } => build(&plan(*k, *strategy, size_budget)?, *m)?,
            GraphSpec::Augmented { steps, inner } => augment_iterated(&inner.build(size_budget)?, *steps, size_budget)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "complete:4",
            "cycle:7",
            "paley:13",
            "lps:5,13",
            "hypercube:3",
            "petersen",
            "random:10,3,7",
            "pipeline:8,lps,1",
            "aug:2:complete:4",
            "aug:1:aug:1:cycle:5",
        ] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(
            "pipeline:20,paper,1".parse::<GraphSpec>().unwrap(),
            GraphSpec::Pipeline {
                k: 20,
                strategy: Strategy::PaperP2,
                m: 1
            }
        );
    }

    #[test]
    fn rejects_malformed() {
        for s in [
            "",
            "wheel:5",
            "complete",
            "complete:x",
            "lps:5",
            "aug:2",
            "aug:x:complete:4",
            "pipeline:8,zig,1",
            "petersen:3",
        ] {
            assert!(s.parse::<GraphSpec>().is_err(), "{s} should not parse");
        }
    }

    #[test]
    fn builds() {
        let g = "aug:2:complete:4".parse::<GraphSpec>().unwrap().build(1000).unwrap();
        assert_eq!((g.n(), g.k(), g.label()), (16, 5, "K4+K2^2"));
        let p = "paley:13".parse::<GraphSpec>().unwrap().build(1000).unwrap();
        assert_eq!((p.n(), p.k()), (13, 6));
    }

    #[test]
    fn errors_are_classified() {
        let not_prime = "lps:5,12".parse::<GraphSpec>().unwrap().build(1 << 20).unwrap_err();
        assert_eq!(not_prime.exit_code(), 2);
        let big = "complete:5000".parse::<GraphSpec>().unwrap().build(1000).unwrap_err();
        assert!(matches!(big, Error::Graph(GraphError::BudgetExceeded { .. })));
        assert_eq!(big.exit_code(), 3);
        let aug = "aug:10:cycle:5".parse::<GraphSpec>().unwrap().build(1000).unwrap_err();
        assert_eq!(aug.exit_code(), 3);
    }
}
