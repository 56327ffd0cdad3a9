//! Fuzzy relational algebra over labeled finite carriers.
//!
//! The crate provides the four BK relational products (circle, triangle
//! sub-/superproduct, square) in harsh and mean variants over a catalog of
//! many-valued connective systems, together with the machinery built on top
//! of them: relational property degrees and theorem-level criteria, Hasse
//! diagram extraction from fuzzy preorders, repertory-grid conversion, and
//! the dependency / comparison / ranking / cost pipelines.
//!
//! ```
//! use bkrel::{compose, AlphaPolicy, ConnectiveSystem, FuzzyRelation, LabeledSet,
//!             Mode, ProductSpec, ProductType};
//! use bkrel::structure::{hasse_diagram, preorder_of};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let people = LabeledSet::new(["p1", "p2"])?;
//! let symptoms = LabeledSet::new(["s1", "s2", "s3"])?;
//! let r = FuzzyRelation::new(people, symptoms,
//!     vec![vec![0.9, 0.4, 0.0], vec![0.7, 0.8, 0.2]])?;
//!
//! // degree to which one row's profile sits inside another's: R ◁ Rᵀ
//! let spec = ProductSpec::new(ProductType::Sub, Mode::Mean, ConnectiveSystem::Lukasiewicz);
//! let inclusion = compose(&r, &r.transpose(), spec)?;
//! let diagram = hasse_diagram(&preorder_of(&inclusion, AlphaPolicy::MatrixMean)?)?;
//! assert!(diagram.to_dot().starts_with("digraph hasse"));
//! # Ok(())
//! # }
//! ```

pub mod analysis;
pub mod grid;
pub mod logic;
pub mod properties;
pub mod relation;
pub mod structure;

pub use logic::{ConnectiveSystem, LogicError, TNorm, TruthValue};
pub use relation::{
    alpha_cut, circle_compose_tnorm, compose, inclusion_degree, ternary_square, AlphaPolicy,
    FuzzyRelation, LabeledSet, Mode, ProductSpec, ProductType, QuaternaryArray, RelationError,
    TernaryRelation,
};
