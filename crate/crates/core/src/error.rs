use thiserror::Error;

use crate::cw::Violation;
use crate::fvs::RealizeError;
use crate::graph::GraphError;
use crate::instance::Problem;

/// Errors shared by the specialised solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{method} does not handle {kind} instances")]
    UnsupportedProblem { method: &'static str, kind: Problem },
    #[error("graph is not a split graph")]
    NotSplit,
    #[error("expression is redundant: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    RedundantExpression(Vec<Violation>),
    #[error("expression does not denote the instance graph")]
    ExpressionMismatch,
    #[error("{classes} classes cannot be matched to {tokens} tokens")]
    TooManyClasses { classes: usize, tokens: usize },
    #[error("instance too large for the table encoding ({0})")]
    TooLarge(usize),
    #[error(transparent)]
    Realize(#[from] RealizeError),
}
