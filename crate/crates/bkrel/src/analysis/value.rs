//! Value-analysis relational queries over part/variant/feature/cost
//! descriptor sets.

use super::AnalysisError;
use crate::logic::ConnectiveSystem;
use crate::relation::{
    compose, ternary_square, FuzzyRelation, Mode, ProductSpec, ProductType, QuaternaryArray,
    TernaryRelation,
};

/// Inner connective of the part-feature inclusion subproduct. Both readings
/// are in use: the subproduct definition pairs rows with →, the displayed
/// value-analysis formula with ≡.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InclusionInner {
    Implication,
    Equivalence,
}

/// Degree to which the functional features of part i are included in those
/// of part k: the subproduct of a parts × features relation with its own
/// transpose.
pub fn part_feature_inclusion(
    py: &FuzzyRelation,
    inner: InclusionInner,
    mode: Mode,
    system: ConnectiveSystem,
) -> Result<FuzzyRelation, AnalysisError> {
    let product = match inner {
        InclusionInner::Implication => ProductType::Sub,
        InclusionInner::Equivalence => ProductType::Square,
    };
    Ok(compose(py, &py.transpose(), ProductSpec::new(product, mode, system))?)
}

/// Degree to which variant i at cost k is exchangeable for variant l at
/// cost n, matching functional features: the ternary square product of a
/// variants × features × costs relation with itself, paired on the feature
/// axis. Output axes: (variant, cost, variant, cost).
pub fn variant_exchangeability(
    vyc: &TernaryRelation,
    mode: Mode,
    system: ConnectiveSystem,
) -> Result<QuaternaryArray, AnalysisError> {
    Ok(ternary_square(vyc, vyc, 1, mode, system)?)
}
