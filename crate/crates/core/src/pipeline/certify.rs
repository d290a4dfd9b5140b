use serde::{Deserialize, Serialize};

use super::{ConstructionPlan, PlanError};
use crate::graph::{
    is_connected, peel_augmentation, ramanujan_bound, spectrum, GraphError, RegularGraph, SolverConfig, Spectrum,
    SpectrumMethod,
};
use crate::{Error, Result};

/// Slack toward "holds" used by every bound flag.
pub const FLAG_SLACK: f64 = 1e-9;
/// Relative tolerance, per unit of degree, for the exact product law.
const EXACT_LAW_TOLERANCE: f64 = 1e-6;

/// `max(lambda_2(base), q_base - 2) + steps`, or `lambda_2(base)` without
/// augmentation: the top of the spectrum of `base □ Q_steps`.
pub fn exact_lambda2(base_lambda2: f64, q_base: u32, steps: u32) -> f64 {
    if steps == 0 {
        base_lambda2
    } else {
        base_lambda2.max(f64::from(q_base) - 2.0) + f64::from(steps)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverInfo {
    pub method: SpectrumMethod,
    pub tolerance: f64,
    pub residual: f64,
    pub iterations: usize,
    pub dense_threshold: usize,
    pub seed: u64,
}

impl SolverInfo {
    fn new(s: &Spectrum, cfg: &SolverConfig) -> Self {
        Self {
            method: s.method,
            tolerance: s.tolerance,
            residual: s.residual,
            iterations: s.iterations,
            dense_threshold: cfg.dense_threshold,
            seed: cfg.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaseInfo {
    pub label: String,
    pub n: usize,
    pub q_base: u32,
    pub steps: u32,
    /// Absent when the graph does not peel back to the planned base.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda2: Option<f64>,
}

/// Bound checks; each is a pure function of the report's numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    /// `lambda2 <= 4 sqrt(k - 1) + k^(101/232)`.
    pub theorem2_bound_holds: bool,
    /// `lambda2 <= 2 sqrt(k - 1)`.
    pub ramanujan_holds: bool,
    /// `lambda2 <= lambda2(base) + steps`: the single-step inequality iterated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem4_iterated_claim_holds: Option<bool>,
    /// `|lambda2 - exact_prediction| <= 1e-6 k`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_law_holds: Option<bool>,
    /// `lambda2 <= base_bound + steps`.
    pub predicted_bound_holds: bool,
}

impl Flags {
    pub fn recompute(r: &CertificationReport) -> Self {
        let within = |bound: f64| r.lambda2 <= bound + FLAG_SLACK;
        Self {
            theorem2_bound_holds: within(r.paper_bound),
            ramanujan_holds: within(r.ramanujan_bound),
            theorem4_iterated_claim_holds: r.theorem4_iterated_value.map(within),
            exact_law_holds: r
                .exact_prediction
                .map(|e| (r.lambda2 - e).abs() <= EXACT_LAW_TOLERANCE * f64::from(r.k)),
            predicted_bound_holds: within(r.plan.predicted_lambda2_ub),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub label: String,
    pub k: u32,
    pub n: usize,
    pub lambda1: f64,
    pub lambda2: f64,
    pub ramanujan_bound: f64,
    pub paper_bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_prediction: Option<f64>,
    /// `lambda2(base) + steps`, the value the iterated single-step claim allows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem4_iterated_value: Option<f64>,
    /// `lambda2 / 2 sqrt(k - 1)`; reporting only.
    pub alon_boppana_ratio: f64,
    pub base: BaseInfo,
    pub flags: Flags,
    pub solver: SolverInfo,
    pub plan: ConstructionPlan,
}

impl CertificationReport {
    pub fn to_document(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Serialize(e.to_string()))
    }

    pub fn from_document(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Serialize(e.to_string()))
    }
}

/// Measure `graph` and check it against `plan`.
///
/// The base is recovered by peeling `plan.steps` factors of `K2`; when that
/// fails the exact prediction is reported as absent.
pub fn certify(graph: &RegularGraph, plan: &ConstructionPlan, cfg: &SolverConfig) -> Result<CertificationReport> {
    let mut base = Some(graph.clone());
    for _ in 0..plan.steps {
        base = base.as_ref().and_then(peel_augmentation);
    }
    let base_lambda2 = match &base {
        Some(b) => Some(spectrum(b, cfg)?.lambda2()),
        None => None,
    };
    certify_with_base(graph, plan, base.as_ref(), base_lambda2, cfg)
}

/// Like [`certify`], reusing an already-measured base eigenvalue.
pub fn certify_with_base(
    graph: &RegularGraph,
    plan: &ConstructionPlan,
    base: Option<&RegularGraph>,
    base_lambda2: Option<f64>,
    cfg: &SolverConfig,
) -> Result<CertificationReport> {
    if graph.k() != plan.k {
        return Err(PlanError::DegreeMismatch {
            expected: plan.k,
            found: graph.k(),
        }
        .into());
    }
    if !is_connected(graph) {
        return Err(GraphError::Disconnected.into());
    }
    let spec = spectrum(graph, cfg)?;
    let k = graph.k();
    let (lambda1, lambda2) = (spec.lambda1(), spec.lambda2());
    let lambda1_tol = cfg.tolerance * f64::from(k);
    if (lambda1 - f64::from(k)).abs() > lambda1_tol {
        return Err(Error::Lambda1Mismatch {
            lambda1,
            k,
            tolerance: lambda1_tol,
        });
    }
    let steps = plan.steps;
    let base_info = BaseInfo {
        label: base.map_or_else(|| "unknown".to_string(), |b| b.label().to_string()),
        n: base.map_or(graph.n() >> steps, RegularGraph::n),
        q_base: plan.q_base,
        steps,
        lambda2: base_lambda2,
    };
    let ramanujan = ramanujan_bound(k);
    let mut report = CertificationReport {
        label: graph.label().to_string(),
        k,
        n: graph.n(),
        lambda1,
        lambda2,
        ramanujan_bound: ramanujan,
        paper_bound: plan.paper_bound,
        exact_prediction: base_lambda2.map(|b| exact_lambda2(b, plan.q_base, steps)),
        theorem4_iterated_value: base_lambda2.map(|b| b + f64::from(steps)),
        alon_boppana_ratio: if ramanujan > 0.0 { lambda2 / ramanujan } else { f64::NAN },
        base: base_info,
        flags: Flags {
            theorem2_bound_holds: false,
            ramanujan_holds: false,
            theorem4_iterated_claim_holds: None,
            exact_law_holds: None,
            predicted_bound_holds: false,
        },
        solver: SolverInfo::new(&spec, cfg),
        plan: plan.clone(),
    };
    report.flags = Flags::recompute(&report);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, paley_graph};
    use crate::graph::augment_iterated;
    use crate::pipeline::observe_plan;

    fn observed(g: &RegularGraph) -> CertificationReport {
        let (plan, _) = observe_plan(g, 1 << 20);
        certify(g, &plan, &SolverConfig::default()).unwrap()
    }

    #[test]
    fn exact_formula() {
        assert_eq!(exact_lambda2(-1.0, 3, 0), -1.0);
        assert_eq!(exact_lambda2(-1.0, 3, 1), 2.0);
        assert_eq!(exact_lambda2(-1.0, 3, 2), 3.0);
        assert_eq!(exact_lambda2(4.5, 6, 2), 6.5);
    }

    #[test]
    fn complete_graph_all_flags_hold() {
        let r = observed(&complete_graph(4).unwrap());
        assert!((r.lambda2 + 1.0).abs() < 1e-9);
        assert_eq!(r.base.steps, 0);
        assert!(r.flags.theorem2_bound_holds && r.flags.ramanujan_holds && r.flags.predicted_bound_holds);
        assert_eq!(r.flags.theorem4_iterated_claim_holds, Some(true));
        assert_eq!(r.flags.exact_law_holds, Some(true));
    }

    #[test]
    fn k4_augmentations_expose_the_single_step_gap() {
        let k4 = complete_graph(4).unwrap();
        let one = observed(&augment_iterated(&k4, 1, 64).unwrap());
        assert!((one.lambda2 - 2.0).abs() < 1e-9);
        assert_eq!(one.flags.theorem4_iterated_claim_holds, Some(false));
        assert!(one.flags.ramanujan_holds);
        let two = observed(&augment_iterated(&k4, 2, 64).unwrap());
        assert!((two.lambda2 - 3.0).abs() < 1e-9);
        assert!((two.theorem4_iterated_value.unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(two.flags.theorem4_iterated_claim_holds, Some(false));
        assert_eq!(two.flags.exact_law_holds, Some(true));
    }

    #[test]
    fn document_round_trip_and_flag_integrity() {
        let r = observed(&augment_iterated(&paley_graph(13).unwrap(), 1, 64).unwrap());
        let doc = r.to_document().unwrap();
        for key in [
            "k =",
            "n =",
            "lambda1 =",
            "lambda2 =",
            "ramanujan_bound =",
            "paper_bound =",
            "exact_prediction =",
            "[flags]",
            "[solver]",
        ] {
            assert!(doc.contains(key), "missing {key} in\n{doc}");
        }
        let back = CertificationReport::from_document(&doc).unwrap();
        assert_eq!(back, r);
        assert_eq!(Flags::recompute(&back), back.flags);
    }

    #[test]
    fn degree_mismatch_rejected() {
        let (plan, _) = observe_plan(&complete_graph(5).unwrap(), 64);
        let err = certify(&complete_graph(4).unwrap(), &plan, &SolverConfig::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::Plan(PlanError::DegreeMismatch { expected: 4, found: 3 })
        ));
    }
}
