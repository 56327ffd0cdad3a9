//! End-to-end analysis pipelines over grids, value tables and relations:
//! cost-driver dependency structures, object and context comparison,
//! interval ranking across a triple of logics, interval cost aggregation,
//! and the ternary value-analysis products.

mod comparison;
mod contexts;
mod cost;
mod dependency;
mod fire;
mod value;

pub use comparison::{compare_objects, ComparisonReport, ConstructComparison};
pub use contexts::{compare_contexts, ClassDifference, ContextAnalysis, ContextComparison};
pub use cost::{cost_interval, CostInterval};
pub use dependency::{dependency_analysis, DependencyOptions, DependencyReport};
pub use fire::{
    fire_ranking, FireOptions, FireResult, Polarity, RankInterval, SystemDiagram, SystemLevel,
    ValueTable,
};
pub use value::{part_feature_inclusion, variant_exchangeability, InclusionInner};

use thiserror::Error;

use crate::grid::GridError;
use crate::properties::PropertiesError;
use crate::relation::RelationError;
use crate::structure::StructureError;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Properties(#[from] PropertiesError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("construct sets differ: {details}")]
    ConstructMismatch { details: String },
    #[error("the grids share no construct ids")]
    EmptyOverlap,
    #[error("ranking needs at least 2 items, got {0}")]
    TooFewItems(usize),
    #[error("no usable parameter columns remain after dropping constant ones")]
    NoUsableColumns,
    #[error("{got} polarity flags for {expected} parameters")]
    PolarityLength { got: usize, expected: usize },
    #[error("ranking needs at least one connective system")]
    NoSystems,
    #[error("value table: {0}")]
    ValueCsv(String),
    #[error("mixed units across included constructs: {0:?}")]
    MixedUnits(Vec<String>),
    #[error("no constructs with numeric values on both poles")]
    NoNumericConstructs,
    #[error("{got} weights for {expected} constructs")]
    WeightsLength { got: usize, expected: usize },
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("alpha-low {low} must lie below alpha {alpha}")]
    AlphaLowNotBelow { low: f64, alpha: f64 },
}
