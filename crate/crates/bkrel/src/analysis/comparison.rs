//! Similarity and difference of two grids over the same constructs.
//!
//! Respondent sets are aggregated to a per-construct mean membership first;
//! the per-construct difference is then |m_a − m_b| and the similarity its
//! complement (the Łukasiewicz equivalence degree of the means).

use serde::Serialize;

use super::AnalysisError;
use crate::grid::{to_profile_matrix, RepertoryGrid};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstructComparison {
    pub id: String,
    pub similarity: f64,
    pub difference: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub object_a: String,
    pub object_b: String,
    pub per_construct: Vec<ConstructComparison>,
    pub mean_difference: f64,
    pub max_difference: f64,
    /// Constructs with difference within 10% of the maximum difference.
    pub count_near_max: usize,
    /// Constructs with difference within min + 10% of the maximum.
    pub count_near_min: usize,
    pub count_similar_70: usize,
    pub pct_similar_70: f64,
}

impl ComparisonReport {
    /// Per-construct CSV with the stable column order id, similarity,
    /// difference.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,similarity,difference\n");
        for c in &self.per_construct {
            out.push_str(&format!("{},{},{}\n", c.id, c.similarity, c.difference));
        }
        out
    }

    /// The seven summary statistics as measure,value rows.
    pub fn summary_csv(&self) -> String {
        let mut out = String::from("measure,value\n");
        out.push_str(&format!("cost_drivers,{}\n", self.per_construct.len()));
        out.push_str(&format!("mean_difference,{}\n", self.mean_difference));
        out.push_str(&format!("max_difference,{}\n", self.max_difference));
        out.push_str(&format!("in_max_band,{}\n", self.count_near_max));
        out.push_str(&format!("in_min_band,{}\n", self.count_near_min));
        out.push_str(&format!("similarity_ge_70_count,{}\n", self.count_similar_70));
        out.push_str(&format!("similarity_ge_70_pct,{}\n", self.pct_similar_70));
        out
    }
}

pub fn compare_objects(
    a: &RepertoryGrid,
    b: &RepertoryGrid,
) -> Result<ComparisonReport, AnalysisError> {
    let ids_a = a.construct_ids();
    let ids_b = b.construct_ids();
    if ids_a != ids_b {
        let only_a: Vec<&str> = ids_a.iter().filter(|i| !ids_b.contains(i)).copied().collect();
        let only_b: Vec<&str> = ids_b.iter().filter(|i| !ids_a.contains(i)).copied().collect();
        let details = if only_a.is_empty() && only_b.is_empty() {
            format!("same ids in different order ({} vs {})", ids_a.join(" "), ids_b.join(" "))
        } else {
            format!(
                "only in first grid: [{}]; only in second grid: [{}]",
                only_a.join(" "),
                only_b.join(" ")
            )
        };
        return Err(AnalysisError::ConstructMismatch { details });
    }

    let mean_a = mean_profile(a)?;
    let mean_b = mean_profile(b)?;
    let per_construct: Vec<ConstructComparison> = ids_a
        .iter()
        .enumerate()
        .map(|(i, id)| {
            let difference = (mean_a[i] - mean_b[i]).abs();
            ConstructComparison {
                id: id.to_string(),
                similarity: 1.0 - difference,
                difference,
            }
        })
        .collect();

    let n = per_construct.len();
    let mean_difference = per_construct.iter().map(|c| c.difference).sum::<f64>() / n as f64;
    let max_difference = per_construct.iter().map(|c| c.difference).fold(0.0, f64::max);
    let min_difference = per_construct.iter().map(|c| c.difference).fold(1.0, f64::min);
    let band = 0.1 * max_difference;
    // band membership tolerates ulp-level noise so that exact boundary ties
    // count the same way under the pole-negation symmetry m -> 1 - m
    const BAND_TOLERANCE: f64 = 1e-12;
    let count_near_max = per_construct
        .iter()
        .filter(|c| c.difference >= max_difference - band - BAND_TOLERANCE)
        .count();
    let count_near_min = per_construct
        .iter()
        .filter(|c| c.difference <= min_difference + band + BAND_TOLERANCE)
        .count();
    let count_similar_70 = per_construct
        .iter()
        .filter(|c| c.similarity >= 0.7 - BAND_TOLERANCE)
        .count();
    let pct_similar_70 = 100.0 * count_similar_70 as f64 / n as f64;

    Ok(ComparisonReport {
        object_a: a.object.clone(),
        object_b: b.object.clone(),
        per_construct,
        mean_difference,
        max_difference,
        count_near_max,
        count_near_min,
        count_similar_70,
        pct_similar_70,
    })
}

/// Per-construct mean membership across the grid's respondents.
fn mean_profile(g: &RepertoryGrid) -> Result<Vec<f64>, AnalysisError> {
    let m = to_profile_matrix(g)?;
    Ok(m
        .rows()
        .map(|row| row.iter().sum::<f64>() / row.len() as f64)
        .collect())
}
