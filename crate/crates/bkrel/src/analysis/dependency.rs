//! Cost-driver dependency analysis of a repertory grid.
//!
//! The dependency relation is oriented R[i][j] = degree to which construct
//! i's profile is included in construct j's, read "i depends on j". Modal
//! edge classes are threshold policies: necessary = harsh degree ≥ α,
//! possible = mean degree ≥ α, independent = mean degree < α_low (default
//! α/2).

use serde::Serialize;

use super::AnalysisError;
use crate::grid::{to_profile_matrix_with, RepertoryGrid, ScaleMap};
use crate::logic::ConnectiveSystem;
use crate::relation::{compose, AlphaPolicy, FuzzyRelation, Mode, ProductSpec, ProductType};
use crate::structure::{hasse_diagram, preorder_of, HasseDiagram, Preorder};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DependencyOptions {
    pub system: ConnectiveSystem,
    pub mode: Mode,
    pub alpha: AlphaPolicy,
    /// Threshold below which a pair counts as independent; defaults to α/2.
    pub alpha_low: Option<f64>,
    pub scale_map: ScaleMap,
}

impl Default for DependencyOptions {
    fn default() -> Self {
        DependencyOptions {
            system: ConnectiveSystem::Lukasiewicz,
            mode: Mode::Mean,
            alpha: AlphaPolicy::MatrixMean,
            alpha_low: None,
            scale_map: ScaleMap::Affine7,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DependencyReport {
    pub object: String,
    pub context: String,
    pub system: ConnectiveSystem,
    pub mode: Mode,
    pub alpha_used: f64,
    pub alpha_low: f64,
    /// constructs × constructs dependency degrees in the selected mode.
    pub relation: FuzzyRelation,
    pub preorder: Preorder,
    pub hasse: HasseDiagram,
    pub necessary: Vec<(String, String)>,
    pub possible: Vec<(String, String)>,
    pub independent: Vec<(String, String)>,
    /// respondents × respondents agreement degrees (square product).
    pub respondent_consistency: FuzzyRelation,
    pub warnings: Vec<String>,
}

pub fn dependency_analysis(
    g: &RepertoryGrid,
    opts: &DependencyOptions,
) -> Result<DependencyReport, AnalysisError> {
    let profiles = to_profile_matrix_with(g, opts.scale_map)?;
    let profiles_t = profiles.transpose();
    let sub = |mode| ProductSpec::new(ProductType::Sub, mode, opts.system);
    let relation = compose(&profiles, &profiles_t, sub(opts.mode))?;
    let harsh = match opts.mode {
        Mode::Harsh => relation.clone(),
        Mode::Mean => compose(&profiles, &profiles_t, sub(Mode::Harsh))?,
    };
    let mean = match opts.mode {
        Mode::Mean => relation.clone(),
        Mode::Harsh => compose(&profiles, &profiles_t, sub(Mode::Mean))?,
    };

    let alpha = opts.alpha.resolve(&relation)?;
    let alpha_low = match opts.alpha_low {
        Some(low) => {
            AlphaPolicy::level(low)?;
            if low >= alpha && !(low == 0.0 && alpha == 0.0) {
                return Err(AnalysisError::AlphaLowNotBelow { low, alpha });
            }
            low
        }
        None => alpha / 2.0,
    };

    let preorder = preorder_of(&relation, AlphaPolicy::Level(alpha))?;
    let hasse = hasse_diagram(&preorder)?;

    let n = relation.source().len();
    let pair = |i: usize, j: usize| {
        (
            relation.source().label(i).to_string(),
            relation.source().label(j).to_string(),
        )
    };
    let mut necessary = Vec::new();
    let mut possible = Vec::new();
    let mut independent = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if harsh.degree(i, j) >= alpha {
                necessary.push(pair(i, j));
            }
            if mean.degree(i, j) >= alpha {
                possible.push(pair(i, j));
            }
            if mean.degree(i, j) < alpha_low {
                independent.push(pair(i, j));
            }
        }
    }

    let respondent_consistency = compose(
        &profiles_t,
        &profiles,
        ProductSpec::new(ProductType::Square, opts.mode, opts.system),
    )?;

    let mut warnings = Vec::new();
    if g.constructs.len() == 1 {
        warnings.push("grid has a single construct; the dependency structure is degenerate".into());
    }

    Ok(DependencyReport {
        object: g.object.clone(),
        context: g.context.clone(),
        system: opts.system,
        mode: opts.mode,
        alpha_used: alpha,
        alpha_low,
        relation,
        preorder,
        hasse,
        necessary,
        possible,
        independent,
        respondent_consistency,
        warnings,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::grid::{Assessment, Construct, Pole, RepertoryGrid};

    fn pole(text: &str) -> Pole {
        Pole { text: text.into(), value: None, unit: None }
    }

    pub(crate) fn grid_from_scales(
        context: &str,
        constructs: &[(&str, &[i8])],
        respondents: &[&str],
    ) -> RepertoryGrid {
        let mut assessments = Vec::new();
        for (id, scales) in constructs {
            assert_eq!(scales.len(), respondents.len());
            for (r, &s) in respondents.iter().zip(*scales) {
                assessments.push(Assessment {
                    respondent: r.to_string(),
                    construct: id.to_string(),
                    scale: s,
                });
            }
        }
        RepertoryGrid {
            object: "part".into(),
            context: context.into(),
            constructs: constructs
                .iter()
                .map(|(id, _)| Construct {
                    id: id.to_string(),
                    primary: pole(&format!("{id} high")),
                    secondary: pole(&format!("{id} low")),
                })
                .collect(),
            assessments,
        }
    }

    #[test]
    fn identical_profiles_collapse_to_one_class() {
        let g = grid_from_scales(
            "demo",
            &[("c1", &[1, -2, 0]), ("c2", &[1, -2, 0]), ("c3", &[1, -2, 0])],
            &["r1", "r2", "r3"],
        );
        let rep = dependency_analysis(&g, &DependencyOptions::default()).unwrap();
        assert!(rep.relation.rows().flatten().all(|&v| v == 1.0));
        assert_eq!(rep.hasse.classes.len(), 1);
        assert_eq!(rep.hasse.classes[0], ["c1", "c2", "c3"]);
    }

    #[test]
    fn crisp_support_containment_is_a_necessary_edge() {
        // b's support {r1} is strictly inside a's support {r1, r2}
        let g = grid_from_scales(
            "demo",
            &[("a", &[3, 3, -3]), ("b", &[3, -3, -3])],
            &["r1", "r2", "r3"],
        );
        let opts = DependencyOptions {
            alpha: AlphaPolicy::Level(1.0),
            system: ConnectiveSystem::StandardSharp,
            mode: Mode::Harsh,
            ..DependencyOptions::default()
        };
        let rep = dependency_analysis(&g, &opts).unwrap();
        let edge = ("b".to_string(), "a".to_string());
        assert!(rep.necessary.contains(&edge));
        assert!(!rep.necessary.contains(&("a".to_string(), "b".to_string())));
        // necessary edges are always possible
        for e in &rep.necessary {
            assert!(rep.possible.contains(e));
        }
    }

    #[test]
    fn single_construct_warns_instead_of_failing() {
        let g = grid_from_scales("demo", &[("c1", &[0, 1])], &["r1", "r2"]);
        let rep = dependency_analysis(&g, &DependencyOptions::default()).unwrap();
        assert_eq!(rep.warnings.len(), 1);
    }

    #[test]
    fn alpha_low_must_stay_below_alpha() {
        let g = grid_from_scales("demo", &[("c1", &[0]), ("c2", &[1])], &["r1"]);
        let opts = DependencyOptions {
            alpha: AlphaPolicy::Level(0.5),
            alpha_low: Some(0.9),
            ..DependencyOptions::default()
        };
        assert!(matches!(
            dependency_analysis(&g, &opts),
            Err(AnalysisError::AlphaLowNotBelow { .. })
        ));
    }

    #[test]
    fn respondent_consistency_is_reflexive() {
        let g = grid_from_scales(
            "demo",
            &[("c1", &[3, -1]), ("c2", &[0, 2])],
            &["r1", "r2"],
        );
        let rep = dependency_analysis(&g, &DependencyOptions::default()).unwrap();
        assert_eq!(rep.respondent_consistency.source().labels(), ["r1", "r2"]);
        assert_eq!(rep.respondent_consistency.degree(0, 0), 1.0);
        assert_eq!(rep.respondent_consistency.degree(1, 1), 1.0);
    }
}
