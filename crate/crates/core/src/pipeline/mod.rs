//! Target-degree construction: pick a base degree near `k`, build the base
//! family member, augment with `K2` up to degree `k`, and certify the
//! measured second eigenvalue against every relevant bound.

mod certify;
mod plan;
mod spec;
mod survey;

pub use certify::{
    certify, certify_with_base, exact_lambda2, BaseInfo, CertificationReport, Flags, SolverInfo, FLAG_SLACK,
};
pub use plan::{
    build, build_base, lps_companions, observe_plan, plan, plan_with_bound, BaseBound, BaseParams, ConstructionPlan,
    Strategy,
};
pub use spec::GraphSpec;
pub use survey::{survey, write_survey_csv, SurveyRow};

use thiserror::Error;

use crate::constructions::ConstructionError;

#[derive(Debug, Error)]
pub enum PlanError {
    #[error("target degree must be at least 3, got {0}")]
    DegreeTooSmall(u32),
    #[error("no admissible base for k = {k}: {constraint}")]
    NoAdmissibleBase { k: u32, constraint: String },
    #[error("base {base} with {steps} augmentations needs {vertices} vertices, over the budget of {budget}")]
    OverBudget {
        base: String,
        steps: u32,
        vertices: u128,
        budget: usize,
    },
    #[error("paper-P2 plans are planning-only: the quaternion (Pizer) base family is not constructed")]
    NotBuildable,
    #[error("family index must start at 1, got {0}")]
    BadFamilyIndex(usize),
    #[error("graph has degree {found}, plan targets {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("unknown strategy {0:?} (expected `lps` or `paper`)")]
    UnknownStrategy(String),
    #[error("invalid construction spec {spec:?}: {reason}")]
    BadSpec { spec: String, reason: String },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}
