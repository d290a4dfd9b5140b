use std::fmt;

use thiserror::Error;

use crate::constructions::ConstructionError;
use crate::graph::GraphError;
use crate::numtheory::NumberError;
use crate::pipeline::PlanError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Plan(#[from] PlanError),
    #[error("lambda_1 = {lambda1} differs from the degree {k} by more than {tolerance:e}")]
    Lambda1Mismatch { lambda1: f64, k: u32, tolerance: f64 },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("report serialization failed: {0}")]
    Serialize(String),
}

/// Failure classes, which double as process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Usage = 2,
    Budget = 3,
    Numerical = 4,
}

impl fmt::Display for ErrorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorClass::Usage => "usage",
            ErrorClass::Budget => "budget",
            ErrorClass::Numerical => "numerical",
        })
    }
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Graph(e) => graph_class(e),
            Error::Construction(ConstructionError::TooManyVertices { .. }) => ErrorClass::Budget,
            Error::Construction(ConstructionError::Graph(e)) => graph_class(e),
            Error::Plan(PlanError::OverBudget { .. }) => ErrorClass::Budget,
            Error::Plan(PlanError::Construction(ConstructionError::TooManyVertices { .. })) => ErrorClass::Budget,
            Error::Lambda1Mismatch { .. } => ErrorClass::Numerical,
            _ => ErrorClass::Usage,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.class() as i32
    }
}

fn graph_class(e: &GraphError) -> ErrorClass {
    match e {
        GraphError::BudgetExceeded { .. } => ErrorClass::Budget,
        GraphError::NotConverged { .. } => ErrorClass::Numerical,
        _ => ErrorClass::Usage,
    }
}
