//! Repertory-grid data model: bipolar constructs rated on a 7-point scale
//! per respondent, parsed from a JSON document, converted to fuzzy profile
//! matrices, and negated pole-wise.
//!
//! Grid document format:
//!
//! ```json
//! {
//!   "object": "LPT cover plate",
//!   "context": "ingot",
//!   "constructs": [
//!     { "id": "c2",
//!       "primary":   { "text": "Low raw material costs",  "value": 10, "unit": "$/lb" },
//!       "secondary": { "text": "High raw material costs", "value": 40, "unit": "$/lb" } }
//!   ],
//!   "assessments": [ { "respondent": "r1", "construct": "c2", "scale": -1 } ]
//! }
//! ```

use std::io;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::relation::{FuzzyRelation, LabeledSet, RelationError};

pub const SCALE_MIN: i8 = -3;
pub const SCALE_MAX: i8 = 3;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("malformed grid document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("grid has no constructs")]
    NoConstructs,
    #[error("duplicate construct id `{0}`")]
    DuplicateConstruct(String),
    #[error("assessment {index}: unknown construct id `{construct}`")]
    UnknownConstruct { index: usize, construct: String },
    #[error("assessment {index} ({respondent}, {construct}): scale {scale} out of range [{SCALE_MIN}, {SCALE_MAX}]")]
    ScaleOutOfRange { index: usize, respondent: String, construct: String, scale: i8 },
    #[error("duplicate assessment for ({respondent}, {construct})")]
    DuplicateAssessment { respondent: String, construct: String },
    #[error("grid has no respondents")]
    NoRespondents,
    #[error("missing assessment for ({respondent}, {construct}); cells are not imputed")]
    MissingCell { respondent: String, construct: String },
    #[error("unknown scale map `{0}` (expected `affine7`)")]
    UnknownScaleMap(String),
    #[error("restriction leaves no constructs")]
    EmptyRestriction,
    #[error(transparent)]
    Relation(#[from] RelationError),
}

/// One pole of a bipolar construct: description text plus an optional
/// numeric range with unit text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Pole {
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Construct {
    pub id: String,
    pub primary: Pole,
    pub secondary: Pole,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assessment {
    pub respondent: String,
    pub construct: String,
    pub scale: i8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepertoryGrid {
    pub object: String,
    pub context: String,
    pub constructs: Vec<Construct>,
    pub assessments: Vec<Assessment>,
}

impl RepertoryGrid {
    /// Respondents in first-seen assessment order.
    pub fn respondents(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for a in &self.assessments {
            if !out.contains(&a.respondent.as_str()) {
                out.push(&a.respondent);
            }
        }
        out
    }

    pub fn construct_ids(&self) -> Vec<&str> {
        self.constructs.iter().map(|c| c.id.as_str()).collect()
    }

    pub fn validate(&self) -> Result<(), GridError> {
        if self.constructs.is_empty() {
            return Err(GridError::NoConstructs);
        }
        let mut ids = std::collections::HashSet::new();
        for c in &self.constructs {
            if !ids.insert(c.id.as_str()) {
                return Err(GridError::DuplicateConstruct(c.id.clone()));
            }
        }
        let mut cells = std::collections::HashSet::new();
        for (index, a) in self.assessments.iter().enumerate() {
            if !ids.contains(a.construct.as_str()) {
                return Err(GridError::UnknownConstruct { index, construct: a.construct.clone() });
            }
            if !(SCALE_MIN..=SCALE_MAX).contains(&a.scale) {
                return Err(GridError::ScaleOutOfRange {
                    index,
                    respondent: a.respondent.clone(),
                    construct: a.construct.clone(),
                    scale: a.scale,
                });
            }
            if !cells.insert((a.respondent.as_str(), a.construct.as_str())) {
                return Err(GridError::DuplicateAssessment {
                    respondent: a.respondent.clone(),
                    construct: a.construct.clone(),
                });
            }
        }
        if self.respondents().is_empty() {
            return Err(GridError::NoRespondents);
        }
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("grid serialization")
    }

    /// The grid restricted to the given construct ids, in the given order.
    pub fn restricted(&self, ids: &[&str]) -> Result<RepertoryGrid, GridError> {
        let constructs: Vec<Construct> = ids
            .iter()
            .filter_map(|id| self.constructs.iter().find(|c| c.id == *id).cloned())
            .collect();
        if constructs.is_empty() {
            return Err(GridError::EmptyRestriction);
        }
        let keep: std::collections::HashSet<&str> =
            constructs.iter().map(|c| c.id.as_str()).collect();
        let assessments = self
            .assessments
            .iter()
            .filter(|a| keep.contains(a.construct.as_str()))
            .cloned()
            .collect();
        Ok(RepertoryGrid {
            object: self.object.clone(),
            context: self.context.clone(),
            constructs,
            assessments,
        })
    }
}

/// Parses and fully validates a grid document.
pub fn parse_grid(document: &str) -> Result<RepertoryGrid, GridError> {
    let grid: RepertoryGrid = serde_json::from_str(document)?;
    grid.validate()?;
    Ok(grid)
}

pub fn parse_grid_reader<R: io::Read>(reader: R) -> Result<RepertoryGrid, GridError> {
    let grid: RepertoryGrid = serde_json::from_reader(reader)?;
    grid.validate()?;
    Ok(grid)
}

/// Scale-to-membership maps. `Affine7` sends the 7-point scale {-3..3}
/// affinely onto {0, 1/6, ..., 1}, primary pole (+3) to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScaleMap {
    #[default]
    #[serde(rename = "affine7")]
    Affine7,
}

impl ScaleMap {
    pub fn membership(self, scale: i8) -> f64 {
        match self {
            ScaleMap::Affine7 => (scale as f64 + 3.0) / 6.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScaleMap::Affine7 => "affine7",
        }
    }
}

impl FromStr for ScaleMap {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "affine7" => Ok(ScaleMap::Affine7),
            other => Err(GridError::UnknownScaleMap(other.to_string())),
        }
    }
}

/// Profile matrix of a grid: constructs × respondents, memberships from the
/// default affine map. Missing cells are errors, never imputed.
pub fn to_profile_matrix(g: &RepertoryGrid) -> Result<FuzzyRelation, GridError> {
    to_profile_matrix_with(g, ScaleMap::Affine7)
}

pub fn to_profile_matrix_with(
    g: &RepertoryGrid,
    map: ScaleMap,
) -> Result<FuzzyRelation, GridError> {
    g.validate()?;
    let respondents = g.respondents();
    let constructs = LabeledSet::new(g.construct_ids())?;
    let resp_set = LabeledSet::new(respondents.iter().map(|r| r.to_string()))?;
    let mut degrees = vec![f64::NAN; constructs.len() * resp_set.len()];
    for a in &g.assessments {
        let i = constructs.position(&a.construct).expect("validated");
        let j = resp_set.position(&a.respondent).expect("validated");
        degrees[i * resp_set.len() + j] = map.membership(a.scale);
    }
    for i in 0..constructs.len() {
        for j in 0..resp_set.len() {
            if degrees[i * resp_set.len() + j].is_nan() {
                return Err(GridError::MissingCell {
                    respondent: resp_set.label(j).to_string(),
                    construct: constructs.label(i).to_string(),
                });
            }
        }
    }
    Ok(FuzzyRelation::from_flat(constructs, resp_set, degrees)?)
}

/// Swaps poles and negates every scale value, prefixing construct ids with
/// `not_`. Memberships of the result are 1 minus the originals.
pub fn negate_grid(g: &RepertoryGrid) -> RepertoryGrid {
    let constructs = g
        .constructs
        .iter()
        .map(|c| Construct {
            id: format!("not_{}", c.id),
            primary: c.secondary.clone(),
            secondary: c.primary.clone(),
        })
        .collect();
    let assessments = g
        .assessments
        .iter()
        .map(|a| Assessment {
            respondent: a.respondent.clone(),
            construct: format!("not_{}", a.construct),
            scale: -a.scale,
        })
        .collect();
    RepertoryGrid {
        object: g.object.clone(),
        context: g.context.clone(),
        constructs,
        assessments,
    }
}
