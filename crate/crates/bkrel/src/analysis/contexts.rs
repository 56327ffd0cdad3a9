//! Cross-context comparison: do the constructs shared by two contexts
//! interact the same way in each? Both grids are restricted to the shared
//! ids, analyzed positively and with negated poles, and checked for
//! contrapositive symmetry.

use serde::Serialize;

use super::dependency::{dependency_analysis, DependencyOptions, DependencyReport};
use super::AnalysisError;
use crate::grid::{negate_grid, RepertoryGrid};
use crate::properties::contrapositive_check;
use crate::structure::HasseDiagram;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContextAnalysis {
    pub context: String,
    pub hasse: HasseDiagram,
    pub hasse_negated: HasseDiagram,
    pub contrapositive: bool,
    pub contrapositive_violations: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassDifference {
    pub pair: (String, String),
    pub equivalent_in_a: bool,
    pub equivalent_in_b: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContextComparison {
    pub shared_ids: Vec<String>,
    pub context_a: ContextAnalysis,
    pub context_b: ContextAnalysis,
    /// Dependency edges (x, y), x ≠ y, present in the cut preorder of both
    /// contexts.
    pub common_edges: Vec<(String, String)>,
    /// Construct pairs that are co-equal in one context but not the other.
    pub class_differences: Vec<ClassDifference>,
}

pub fn compare_contexts(
    a: &RepertoryGrid,
    b: &RepertoryGrid,
    opts: &DependencyOptions,
) -> Result<ContextComparison, AnalysisError> {
    let ids_b = b.construct_ids();
    let shared: Vec<&str> = a
        .construct_ids()
        .into_iter()
        .filter(|id| ids_b.contains(id))
        .collect();
    if shared.is_empty() {
        return Err(AnalysisError::EmptyOverlap);
    }
    let ra = a.restricted(&shared)?;
    let rb = b.restricted(&shared)?;

    let side = |g: &RepertoryGrid| -> Result<(DependencyReport, ContextAnalysis), AnalysisError> {
        let rep = dependency_analysis(g, opts)?;
        let neg = dependency_analysis(&negate_grid(g), opts)?;
        let contra = contrapositive_check(rep.preorder.edges(), neg.preorder.edges())?;
        let analysis = ContextAnalysis {
            context: g.context.clone(),
            hasse: rep.hasse.clone(),
            hasse_negated: neg.hasse.clone(),
            contrapositive: contra.holds,
            contrapositive_violations: contra.violations,
        };
        Ok((rep, analysis))
    };
    let (rep_a, context_a) = side(&ra)?;
    let (rep_b, context_b) = side(&rb)?;

    let n = shared.len();
    let mut common_edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rep_a.preorder.has_edge(i, j) && rep_b.preorder.has_edge(i, j) {
                common_edges.push((shared[i].to_string(), shared[j].to_string()));
            }
        }
    }

    let mut class_differences = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let in_a = rep_a.hasse.same_class(shared[i], shared[j]);
            let in_b = rep_b.hasse.same_class(shared[i], shared[j]);
            if in_a != in_b {
                class_differences.push(ClassDifference {
                    pair: (shared[i].to_string(), shared[j].to_string()),
                    equivalent_in_a: in_a,
                    equivalent_in_b: in_b,
                });
            }
        }
    }

    Ok(ContextComparison {
        shared_ids: shared.iter().map(|s| s.to_string()).collect(),
        context_a,
        context_b,
        common_edges,
        class_differences,
    })
}
