//! Interval aggregation of costs from a grid's numeric constructs.
//!
//! For each included construct (numeric values on both poles, identical
//! unit text) and respondent, the point cost interpolates linearly between
//! the poles: secondary + m·(primary − secondary). Respondents span the
//! construct interval; construct intervals aggregate by weighted interval
//! mean. The plinth is the guaranteed-membership floor: the minimum
//! membership over all included assessments.

use serde::Serialize;

use super::AnalysisError;
use crate::grid::{to_profile_matrix, RepertoryGrid};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CostInterval {
    pub low: f64,
    pub high: f64,
    pub plinth: f64,
    pub unit: Option<String>,
    pub included: Vec<String>,
}

pub fn cost_interval(
    g: &RepertoryGrid,
    weights: Option<&[f64]>,
) -> Result<CostInterval, AnalysisError> {
    g.validate()?;
    let profiles = to_profile_matrix(g)?;

    let included: Vec<usize> = g
        .constructs
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            c.primary.value.is_some() && c.secondary.value.is_some() && c.primary.unit == c.secondary.unit
        })
        .map(|(i, _)| i)
        .collect();
    if included.is_empty() {
        return Err(AnalysisError::NoNumericConstructs);
    }
    let unit = g.constructs[included[0]].primary.unit.clone();
    if included.iter().any(|&i| g.constructs[i].primary.unit != unit) {
        let mut units: Vec<String> = included
            .iter()
            .map(|&i| {
                g.constructs[i]
                    .primary
                    .unit
                    .clone()
                    .unwrap_or_else(|| "<none>".into())
            })
            .collect();
        units.sort();
        units.dedup();
        return Err(AnalysisError::MixedUnits(units));
    }

    let weights: Vec<f64> = match weights {
        Some(w) => {
            if w.len() != g.constructs.len() {
                return Err(AnalysisError::WeightsLength {
                    got: w.len(),
                    expected: g.constructs.len(),
                });
            }
            if w.iter().any(|&x| !x.is_finite() || x < 0.0) {
                return Err(AnalysisError::InvalidWeights(
                    "weights must be finite and non-negative".into(),
                ));
            }
            included.iter().map(|&i| w[i]).collect()
        }
        None => vec![1.0; included.len()],
    };
    let weight_sum: f64 = weights.iter().sum();
    if weight_sum == 0.0 {
        return Err(AnalysisError::InvalidWeights(
            "weights of the included constructs sum to zero".into(),
        ));
    }

    let respondents = profiles.target().len();
    let mut low = 0.0;
    let mut high = 0.0;
    let mut plinth = 1.0f64;
    for (k, &ci) in included.iter().enumerate() {
        let c = &g.constructs[ci];
        let primary = c.primary.value.expect("included constructs are numeric");
        let secondary = c.secondary.value.expect("included constructs are numeric");
        let mut construct_low = f64::INFINITY;
        let mut construct_high = f64::NEG_INFINITY;
        for r in 0..respondents {
            let m = profiles.degree(ci, r);
            plinth = plinth.min(m);
            let cost = secondary + m * (primary - secondary);
            construct_low = construct_low.min(cost);
            construct_high = construct_high.max(cost);
        }
        low += weights[k] * construct_low;
        high += weights[k] * construct_high;
    }

    Ok(CostInterval {
        low: low / weight_sum,
        high: high / weight_sum,
        plinth,
        unit,
        included: included
            .iter()
            .map(|&i| g.constructs[i].id.clone())
            .collect(),
    })
}
