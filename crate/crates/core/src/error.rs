use thiserror::Error;

use crate::temporal::TimeEdge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty time-edge set")]
    EmptyTimeEdgeSet,
    #[error("invalid parameters: delta2 ({delta2}) must exceed delta1 ({delta1}) and delta1 must be positive")]
    InvalidParams { delta1: u32, delta2: u32 },
    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: u32, b: u32 },
    #[error("vertex {0} is not part of the graph")]
    UnknownVertex(usize),
    #[error("time-edge {0} has a non-positive time or is a self-loop")]
    InvalidTimeEdge(TimeEdge),
    #[error("vertex universes differ")]
    VertexUniverseMismatch,
    #[error("non-toggling modification: {0}")]
    NonTogglingModification(String),
    #[error("underlying graph is not a path: {0}")]
    NotAPath(String),
    #[error("edge {edge} has {count} appearances, more than sigma = {sigma}")]
    SigmaExceeded { edge: usize, count: usize, sigma: usize },
    #[error("oracle scale limit: {0}")]
    OracleScaleLimit(String),
    #[error("matching target {k} exceeds the {edges} time-edges of the instance")]
    ReductionOutOfRange { k: usize, edges: usize },
    #[error("infeasible generator request: {0}")]
    InfeasibleGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
