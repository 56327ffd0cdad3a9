//! Relational property degrees, closures and interiors, and the
//! theorem-level criteria: preorder and equivalence witnesses, forward
//! compatibility of relation pairs, and contrapositive symmetry.

use serde::Serialize;
use thiserror::Error;

use crate::logic::{ConnectiveSystem, TNorm, TruthValue};
use crate::relation::{
    circle_compose_tnorm, compose, inclusion_degree, FuzzyRelation, Mode, ProductSpec,
    ProductType, RelationError,
};

/// Absolute tolerance for the theorem-criterion equalities. The formulas
/// involved only move input values around (min/max/copies), so double
/// precision keeps them far inside this bound.
pub const THEOREM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum PropertiesError {
    #[error("relation must be square (got {rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("interior undefined for kind `{0:?}`; only the symmetric interior exists")]
    InteriorUndefined(ClosureKind),
    #[error("relations must have the same size (got {left} and {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("shape chain mismatch: need F: A-C, R: A-B, G: B-D, S: C-D")]
    ShapeChain,
    #[error(transparent)]
    Relation(#[from] RelationError),
}

fn require_square(r: &FuzzyRelation) -> Result<(), PropertiesError> {
    if r.is_square() {
        Ok(())
    } else {
        Err(PropertiesError::NonSquare {
            rows: r.source().len(),
            cols: r.target().len(),
        })
    }
}

/// Degrees to which a square relation is reflexive, symmetric and transitive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PropertyReport {
    pub reflexivity: TruthValue,
    pub symmetry: TruthValue,
    pub transitivity: TruthValue,
}

/// Property degrees of a square relation.
///
/// Reflexivity is the minimum of the diagonal; symmetry the harsh mutual
/// inclusion of R and its transpose; transitivity the harsh inclusion of
/// R∘R in R, where the circle is always max–min.
pub fn property_degrees(
    r: &FuzzyRelation,
    system: ConnectiveSystem,
) -> Result<PropertyReport, PropertiesError> {
    require_square(r)?;
    let n = r.source().len();
    let reflexivity = (0..n).map(|i| r.degree(i, i)).fold(1.0, f64::min);
    let t = r.transpose();
    let symmetry = inclusion_degree(&t, r, Mode::Harsh, system)?
        .value()
        .min(inclusion_degree(r, &t, Mode::Harsh, system)?.value());
    let rr = compose(r, r, ProductSpec::new(ProductType::Circle, Mode::Harsh, system))?;
    let transitivity = inclusion_degree(&rr, r, Mode::Harsh, system)?.value();
    Ok(PropertyReport {
        reflexivity: TruthValue::new(reflexivity).expect("diagonal degree in range"),
        symmetry: TruthValue::new(symmetry).expect("inclusion degree in range"),
        transitivity: TruthValue::new(transitivity).expect("inclusion degree in range"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureKind {
    Reflexive,
    Symmetric,
    Transitive,
    Preorder,
}

/// Smallest relation containing `r` with the requested property. The
/// transitive closure iterates R ← max(R, R∘R) under the max–min circle; it
/// reaches its fixpoint in at most |X| rounds.
pub fn closure(r: &FuzzyRelation, kind: ClosureKind) -> Result<FuzzyRelation, PropertiesError> {
    require_square(r)?;
    match kind {
        ClosureKind::Reflexive => Ok(FuzzyRelation::from_fn_unchecked(
            r.source().clone(),
            r.target().clone(),
            |i, j| if i == j { 1.0 } else { r.degree(i, j) },
        )),
        ClosureKind::Symmetric => {
            let t = r.transpose();
            Ok(cellwise(r, &t, f64::max))
        }
        ClosureKind::Transitive => transitive_closure(r.clone()),
        ClosureKind::Preorder => {
            let refl = closure(r, ClosureKind::Reflexive)?;
            transitive_closure(refl)
        }
    }
}

fn transitive_closure(mut acc: FuzzyRelation) -> Result<FuzzyRelation, PropertiesError> {
    let spec = ProductSpec::new(
        ProductType::Circle,
        Mode::Harsh,
        ConnectiveSystem::Lukasiewicz, // circle ignores the implication
    );
    let n = acc.source().len();
    for _ in 0..=n {
        let step = compose(&acc, &acc, spec)?;
        let next = cellwise(&acc, &step, f64::max);
        if next == acc {
            return Ok(acc);
        }
        acc = next;
    }
    // max–min arithmetic only moves existing values around, so the fixpoint
    // is always reached within the loop bound.
    unreachable!("transitive closure did not converge");
}

fn cellwise(a: &FuzzyRelation, b: &FuzzyRelation, f: fn(f64, f64) -> f64) -> FuzzyRelation {
    FuzzyRelation::from_fn_unchecked(a.source().clone(), a.target().clone(), |i, j| {
        f(a.degree(i, j), b.degree(i, j))
    })
}

/// Largest relation contained in `r` with the requested property; only the
/// symmetric interior (cellwise min with the transpose) is defined.
pub fn interior(r: &FuzzyRelation, kind: ClosureKind) -> Result<FuzzyRelation, PropertiesError> {
    require_square(r)?;
    match kind {
        ClosureKind::Symmetric => {
            let t = r.transpose();
            Ok(cellwise(r, &t, f64::min))
        }
        other => Err(PropertiesError::InteriorUndefined(other)),
    }
}

/// Outcome of a theorem-criterion test: the flag and the product relation
/// the criterion compares against.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremWitness {
    pub holds: bool,
    pub witness: FuzzyRelation,
}

/// Preorder criterion: R is a preorder iff R = R ▷ Rᵀ (harsh superproduct).
///
/// The equality characterizes preorders for the residuated systems (`S`,
/// `L`) and for crisp relations under `S#`.
pub fn is_preorder(
    r: &FuzzyRelation,
    system: ConnectiveSystem,
) -> Result<TheoremWitness, PropertiesError> {
    require_square(r)?;
    let witness = compose(
        r,
        &r.transpose(),
        ProductSpec::new(ProductType::Super, Mode::Harsh, system),
    )?;
    let holds = witness.max_abs_diff(r)? <= THEOREM_TOLERANCE;
    Ok(TheoremWitness { holds, witness })
}

/// Equivalence criterion: R is an equivalence iff R = R □ Rᵀ.
pub fn is_equivalence(
    r: &FuzzyRelation,
    system: ConnectiveSystem,
) -> Result<TheoremWitness, PropertiesError> {
    require_square(r)?;
    let witness = compose(
        r,
        &r.transpose(),
        ProductSpec::new(ProductType::Square, Mode::Harsh, system),
    )?;
    let holds = witness.max_abs_diff(r)? <= THEOREM_TOLERANCE;
    Ok(TheoremWitness { holds, witness })
}

/// Result of the generalized-homomorphism test for (F, G) from R to S.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForwardCompatibility {
    /// Fᵀ∘R∘G ⊑ S holds (this is the reported flag).
    pub compatible: bool,
    /// Harsh inclusion degree of Fᵀ∘R∘G in S.
    pub degree: TruthValue,
    /// The explicit criterion F ⊑ R ◁ (G ◁ Sᵀ) holds. Agrees with
    /// `compatible` on crisp inputs under S# and on fuzzy inputs under the
    /// residuated systems.
    pub subproduct_criterion: bool,
}

/// Evaluates both forward-compatibility criteria for the chain
/// F: A-C, R: A-B, G: B-D, S: C-D.
///
/// The circle compositions pair the implication with its residuated t-norm
/// where one exists (min otherwise); this is what makes the two criteria
/// coincide on fuzzy relations.
pub fn forward_compatible(
    f: &FuzzyRelation,
    r: &FuzzyRelation,
    g: &FuzzyRelation,
    s: &FuzzyRelation,
    system: ConnectiveSystem,
) -> Result<ForwardCompatibility, PropertiesError> {
    if f.source() != r.source()
        || r.target() != g.source()
        || f.target() != s.source()
        || g.target() != s.target()
    {
        return Err(PropertiesError::ShapeChain);
    }
    let tnorm = system.residuum_tnorm().unwrap_or(TNorm::Minimum);

    // criterion 1: Fᵀ∘R∘G ⊑ S
    let ft_r = circle_compose_tnorm(&f.transpose(), r, tnorm)?;
    let ft_r_g = circle_compose_tnorm(&ft_r, g, tnorm)?;
    let degree = inclusion_degree(&ft_r_g, s, Mode::Harsh, system)?;
    let compatible = degree.value() >= 1.0 - THEOREM_TOLERANCE;

    // criterion 2: F ⊑ R ◁ (G ◁ Sᵀ)
    let sub = ProductSpec::new(ProductType::Sub, Mode::Harsh, system);
    let g_st = compose(g, &s.transpose(), sub)?;
    let bound = compose(r, &g_st, sub)?;
    let sub_degree = inclusion_degree(f, &bound, Mode::Harsh, system)?;
    let subproduct_criterion = sub_degree.value() >= 1.0 - THEOREM_TOLERANCE;

    Ok(ForwardCompatibility { compatible, degree, subproduct_criterion })
}

/// Result of the contrapositive-symmetry check between a preorder over
/// positive constructs and one over their negations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContrapositiveReport {
    pub holds: bool,
    /// Pairs (i, j), in positive-side labels, where pos has i→j but neg
    /// lacks j→i or vice versa.
    pub violations: Vec<(String, String)>,
}

/// Checks that every edge i→j of `pos` is mirrored by j→i in `neg` and
/// conversely. Both relations are expected crisp (degree 1 marks an edge)
/// and of the same size, with `neg` indexing the negated constructs in the
/// same order.
pub fn contrapositive_check(
    pos: &FuzzyRelation,
    neg: &FuzzyRelation,
) -> Result<ContrapositiveReport, PropertiesError> {
    require_square(pos)?;
    require_square(neg)?;
    let n = pos.source().len();
    if n != neg.source().len() {
        return Err(PropertiesError::SizeMismatch { left: n, right: neg.source().len() });
    }
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let forward = pos.degree(i, j) == 1.0;
            let mirrored = neg.degree(j, i) == 1.0;
            if forward != mirrored {
                violations.push((
                    pos.source().label(i).to_string(),
                    pos.source().label(j).to_string(),
                ));
            }
        }
    }
    Ok(ContrapositiveReport { holds: violations.is_empty(), violations })
}

/// Flat property summary as serialized by the `props` report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PropertySummary {
    pub reflexivity: f64,
    pub symmetry: f64,
    pub transitivity: f64,
    pub is_preorder: bool,
    pub is_equivalence: bool,
}

pub fn summarize(
    r: &FuzzyRelation,
    system: ConnectiveSystem,
) -> Result<PropertySummary, PropertiesError> {
    let degrees = property_degrees(r, system)?;
    Ok(PropertySummary {
        reflexivity: degrees.reflexivity.value(),
        symmetry: degrees.symmetry.value(),
        transitivity: degrees.transitivity.value(),
        is_preorder: is_preorder(r, system)?.holds,
        is_equivalence: is_equivalence(r, system)?.holds,
    })
}
