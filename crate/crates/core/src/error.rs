use thiserror::Error;

use crate::geometry::DistanceMode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("instance has no points")]
    EmptyInstance,
    #[error("point {index} has a non-finite coordinate")]
    NonFiniteCoordinate { index: usize },
    #[error("expected a {expected}-mode distance matrix")]
    ModeMismatch { expected: DistanceMode },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DatasetError {
    #[error("unsupported EDGE_WEIGHT_TYPE {0} (only EUC_2D is read as planar)")]
    UnsupportedEdgeWeightType(String),
    #[error("DIMENSION is {declared} but {found} coordinate rows were read")]
    DimensionMismatch { declared: usize, found: usize },
    #[error("line {line}: malformed row: {reason}")]
    MalformedRow { line: usize, reason: String },
    #[error("curve is missing the record for p = {p}")]
    IncompleteCurve { p: usize },
    #[error("curve JSON does not match schema: {0}")]
    SchemaMismatch(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SetCoverError {
    #[error("new radius {new} is below the current radius {current}")]
    RadiusDecrease { current: f64, new: f64 },
    #[error("demand {demand} is covered by no site")]
    InfeasibleRow { demand: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CpcError {
    #[error("instance has {m} point(s); at least {needed} required")]
    InstanceTooSmall { m: usize, needed: usize },
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
    #[error("enumeration needs {needed} evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("enumeration supports p in 2..=4, got {0}")]
    UnsupportedP(usize),
    #[error("expected a curve computed in {expected} mode")]
    ModeMismatch { expected: DistanceMode },
    #[error(transparent)]
    SetCover(#[from] SetCoverError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmitError {
    #[error("p = {p} is outside 1..={m}")]
    POutOfRange { p: usize, m: usize },
    #[error("upper bound {0} is negative")]
    NonPositiveUB(f64),
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
}
