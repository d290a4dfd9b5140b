use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PlanError;
use crate::constructions::{lps_graph, paper_bound, pizer_bound_for_degree, theorem2_base_bound, LpsParameters};
use crate::graph::{augment_iterated, peel_augmentation, ramanujan_bound, RegularGraph};
use crate::numtheory::{find_p2_at_or_below, is_prime};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Base degree is the largest almost-prime at or below `k`.
    PaperP2,
    /// Base is an LPS graph of degree `p + 1`.
    Lps,
    /// Reconstructed from an existing graph by peeling `K2` factors.
    Observed,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::PaperP2 => "paper-p2",
            Strategy::Lps => "lps",
            Strategy::Observed => "observed",
        })
    }
}

impl FromStr for Strategy {
    type Err = PlanError;

    fn from_str(s: &str) -> Result<Self, PlanError> {
        match s.to_ascii_lowercase().as_str() {
            "lps" => Ok(Strategy::Lps),
            "paper" | "paper-p2" | "p2" => Ok(Strategy::PaperP2),
            other => Err(PlanError::UnknownStrategy(other.to_string())),
        }
    }
}

/// Which formula bounds the base family's second eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseBound {
    /// `4 sqrt(q - 1)` for a `q`-regular base.
    Theorem2,
    /// `d(q) sqrt(q - 1)`: the quaternion-family bound re-indexed to degree `q`.
    Pizer,
    /// `2 sqrt(q - 1)`.
    Ramanujan,
}

impl BaseBound {
    pub fn evaluate(self, q_base: u32) -> f64 {
        match self {
            BaseBound::Theorem2 => theorem2_base_bound(u64::from(q_base)),
            BaseBound::Pizer => pizer_bound_for_degree(u64::from(q_base)),
            BaseBound::Ramanujan => ramanujan_bound(q_base),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum BaseParams {
    /// LPS pair for family index 1; other members vary `q`.
    Lps {
        p: u64,
        q: u64,
    },
    /// Only the degree is known.
    Abstract,
    Observed {
        label: String,
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub k: u32,
    pub strategy: Strategy,
    pub q_base: u32,
    pub base_params: BaseParams,
    /// Number of `K2` augmentations, `k - q_base`.
    pub steps: u32,
    /// `4 sqrt(k - 1) + k^(101/232)`.
    pub paper_bound: f64,
    pub base_bound_formula: BaseBound,
    pub base_bound: f64,
    /// `base_bound + steps`.
    pub predicted_lambda2_ub: f64,
    /// Whether `q_base > k - k^(101/232)`.
    pub in_wu_interval: bool,
    pub size_budget: usize,
}

/// Plan with the default bound convention of each strategy.
pub fn plan(k: u32, strategy: Strategy, size_budget: usize) -> Result<ConstructionPlan> {
    let formula = match strategy {
        Strategy::PaperP2 => BaseBound::Theorem2,
        _ => BaseBound::Ramanujan,
    };
    plan_with_bound(k, strategy, size_budget, formula)
}

pub fn plan_with_bound(k: u32, strategy: Strategy, size_budget: usize, formula: BaseBound) -> Result<ConstructionPlan> {
    if k < 3 {
        return Err(PlanError::DegreeTooSmall(k).into());
    }
    let (q_base, base_params) = match strategy {
        Strategy::PaperP2 => (find_p2_at_or_below(u64::from(k))?.q as u32, BaseParams::Abstract),
        Strategy::Lps => {
            let (p, q) = lps_base(k, size_budget)?;
            ((p + 1) as u32, BaseParams::Lps { p, q })
        }
        Strategy::Observed => {
            return Err(PlanError::UnknownStrategy("observed".into()).into());
        }
    };
    Ok(assemble(k, strategy, q_base, base_params, formula, size_budget))
}

fn assemble(
    k: u32,
    strategy: Strategy,
    q_base: u32,
    base_params: BaseParams,
    formula: BaseBound,
    size_budget: usize,
) -> ConstructionPlan {
    let steps = k - q_base;
    let base_bound = formula.evaluate(q_base);
    let gap = f64::from(steps);
    ConstructionPlan {
        k,
        strategy,
        q_base,
        base_params,
        steps,
        paper_bound: paper_bound(u64::from(k)),
        base_bound_formula: formula,
        base_bound,
        predicted_lambda2_ub: base_bound + gap,
        in_wu_interval: gap < f64::from(k).powf(crate::numtheory::WU_THETA) + 1e-9,
        size_budget,
    }
}

/// Admissible LPS companions of `p` in increasing order: primes
/// `q = 1 (mod 4)`, `q != p`, `q > 2 sqrt(p)`.
pub fn lps_companions(p: u64) -> impl Iterator<Item = u64> {
    (5u64..)
        .step_by(4)
        .filter(move |&q| q != p && u128::from(q).pow(2) > 4 * u128::from(p) && is_prime(q))
}

fn vertices_after(base: u64, steps: u32) -> u128 {
    u128::from(base)
        .checked_shl(steps)
        .filter(|v| v >> steps == u128::from(base))
        .unwrap_or(u128::MAX)
}

fn lps_base(k: u32, size_budget: usize) -> Result<(u64, u64)> {
    let p = (5..u64::from(k))
        .rev()
        .find(|&p| p % 4 == 1 && is_prime(p))
        .ok_or_else(|| PlanError::NoAdmissibleBase {
            k,
            constraint: "no prime p = 1 (mod 4) with p + 1 <= k".into(),
        })?;
    let q = lps_companions(p).next().expect("infinitely many primes are 1 mod 4");
    let params = LpsParameters::new(p, q)?;
    let steps = k - params.degree();
    let vertices = vertices_after(params.vertex_count(), steps);
    if vertices > size_budget as u128 {
        return Err(PlanError::OverBudget {
            base: params.to_string(),
            steps,
            vertices,
            budget: size_budget,
        }
        .into());
    }
    Ok((p, q))
}

/// Base graph of family member `m` (1-based): the `m`-th LPS companion.
pub fn build_base(plan: &ConstructionPlan, m: usize) -> Result<RegularGraph> {
    if m == 0 {
        return Err(PlanError::BadFamilyIndex(m).into());
    }
    let p = match plan.base_params {
        BaseParams::Lps { p, .. } => p,
        _ => return Err(PlanError::NotBuildable.into()),
    };
    let q = lps_companions(p).nth(m - 1).expect("companions are unbounded");
    let params = LpsParameters::new(p, q)?;
    let vertices = vertices_after(params.vertex_count(), plan.steps);
    if vertices > plan.size_budget as u128 {
        return Err(PlanError::OverBudget {
            base: params.to_string(),
            steps: plan.steps,
            vertices,
            budget: plan.size_budget,
        }
        .into());
    }
    Ok(lps_graph(&params)?)
}

/// Family member `m`: the base graph augmented `plan.steps` times.
pub fn build(plan: &ConstructionPlan, m: usize) -> Result<RegularGraph> {
    let base = build_base(plan, m)?;
    Ok(augment_iterated(&base, plan.steps, plan.size_budget)?)
}

/// Describe an existing graph as `base □ Q_s` by peeling as many `K2`
/// factors as its vertex labeling exposes.
pub fn observe_plan(g: &RegularGraph, size_budget: usize) -> (ConstructionPlan, RegularGraph) {
    let mut base = g.clone();
    let mut steps = 0;
    while let Some(smaller) = peel_augmentation(&base) {
        base = smaller;
        steps += 1;
    }
    let params = BaseParams::Observed {
        label: base.label().to_string(),
        n: base.n(),
    };
    let plan = assemble(
        g.k(),
        Strategy::Observed,
        g.k() - steps,
        params,
        BaseBound::Ramanujan,
        size_budget,
    );
    (plan, base)
}
