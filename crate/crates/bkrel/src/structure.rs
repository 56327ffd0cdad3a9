//! From fuzzy relations to Hasse diagrams: α-cut and preorder completion,
//! quotient by mutual reachability, transitive reduction, level assignment,
//! and classivalence partitions.
//!
//! Conventions, applied uniformly so outputs are byte-reproducible:
//! classes and their members follow first-seen input order; cover edges are
//! sorted by (parent, child) class index; a preorder edge x→y makes the
//! class of x the parent (drawn above) of the class of y, and level 1 is
//! the set of classes with no incoming cover.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::logic::TruthValue;
use crate::properties::{closure, ClosureKind, PropertiesError};
use crate::relation::{alpha_cut, AlphaPolicy, FuzzyRelation, LabeledSet, RelationError};

#[derive(Debug, Error)]
pub enum StructureError {
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Properties(#[from] PropertiesError),
    #[error("cycle detected in the quotient order")]
    CycleDetected,
}

/// A crisp reflexive and transitive relation, remembering the α that
/// produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Preorder {
    edges: FuzzyRelation,
    alpha_used: TruthValue,
}

impl Preorder {
    pub fn carrier(&self) -> &LabeledSet {
        self.edges.source()
    }

    pub fn edges(&self) -> &FuzzyRelation {
        &self.edges
    }

    pub fn alpha_used(&self) -> TruthValue {
        self.alpha_used
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.degree(i, j) == 1.0
    }
}

impl Serialize for Preorder {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
    {
        let mut st = serializer.serialize_struct("Preorder", 3)?;
        st.serialize_field("carrier", self.edges.source().labels())?;
        st.serialize_field("alpha", &self.alpha_used.value())?;
        let rows: Vec<Vec<u8>> = self
            .edges
            .rows()
            .map(|r| r.iter().map(|&v| v as u8).collect())
            .collect();
        st.serialize_field("edges", &rows)?;
        st.end()
    }
}

/// α-cut of a square relation followed by reflexive and transitive closure.
pub fn preorder_of(r: &FuzzyRelation, policy: AlphaPolicy) -> Result<Preorder, StructureError> {
    let alpha = policy.resolve(r)?;
    let cut = alpha_cut(r, AlphaPolicy::Level(alpha))?;
    let edges = closure(&cut, ClosureKind::Preorder)?;
    Ok(Preorder {
        edges,
        alpha_used: TruthValue::new(alpha).map_err(RelationError::from)?,
    })
}

/// The quotient of a preorder by mutual reachability: equivalence classes
/// plus the induced strict partial order.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientOrder {
    classes: Vec<Vec<String>>,
    /// above[a * k + b]: class a is strictly above class b (some member of a
    /// reaches some member of b, and not conversely).
    above: Vec<bool>,
}

impl QuotientOrder {
    pub fn classes(&self) -> &[Vec<String>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn strictly_above(&self, a: usize, b: usize) -> bool {
        self.above[a * self.classes.len() + b]
    }

    pub fn class_of(&self, label: &str) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.iter().any(|l| l == label))
    }
}

/// Groups mutually related elements (i ~ j iff i→j and j→i) into classes and
/// projects the preorder onto them. Antisymmetry holds by construction.
#[allow(clippy::needless_range_loop)]
pub fn quotient(p: &Preorder) -> QuotientOrder {
    let n = p.carrier().len();
    let mut class_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = members.len();
        class_of[i] = c;
        let mut group = vec![i];
        for j in (i + 1)..n {
            if class_of[j] == usize::MAX && p.has_edge(i, j) && p.has_edge(j, i) {
                class_of[j] = c;
                group.push(j);
            }
        }
        members.push(group);
    }
    let k = members.len();
    let mut above = vec![false; k * k];
    for a in 0..k {
        for b in 0..k {
            if a != b && p.has_edge(members[a][0], members[b][0]) {
                above[a * k + b] = true;
            }
        }
    }
    let classes = members
        .iter()
        .map(|g| g.iter().map(|&i| p.carrier().label(i).to_string()).collect())
        .collect();
    QuotientOrder { classes, above }
}

/// Minimal cover set whose transitive closure equals the strict quotient
/// order. Pairs are (parent, child) class indices, sorted.
pub fn transitive_reduction(q: &QuotientOrder) -> Result<Vec<(usize, usize)>, StructureError> {
    let k = q.len();
    for a in 0..k {
        for b in (a + 1)..k {
            if q.strictly_above(a, b) && q.strictly_above(b, a) {
                return Err(StructureError::CycleDetected);
            }
        }
    }
    let mut covers = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if q.strictly_above(a, b)
                && !(0..k).any(|c| q.strictly_above(a, c) && q.strictly_above(c, b))
            {
                covers.push((a, b));
            }
        }
    }
    Ok(covers)
}

/// Level per class: 1 for classes with no incoming cover, otherwise one more
/// than the longest cover path from any maximal class.
pub fn levels(class_count: usize, covers: &[(usize, usize)]) -> Vec<u32> {
    let mut level = vec![1u32; class_count];
    // longest-path relaxation; the cover graph is acyclic with depth < k
    for _ in 0..class_count {
        let mut changed = false;
        for &(parent, child) in covers {
            if level[child] < level[parent] + 1 {
                level[child] = level[parent] + 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    level
}

/// Quotient partial order with equivalence-class nodes, cover edges, and
/// level indices (1 = top).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HasseDiagram {
    pub classes: Vec<Vec<String>>,
    pub covers: Vec<(usize, usize)>,
    pub levels: Vec<u32>,
    pub alpha: f64,
}

impl HasseDiagram {
    pub fn class_index_of(&self, label: &str) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.iter().any(|l| l == label))
    }

    pub fn level_of(&self, label: &str) -> Option<u32> {
        self.class_index_of(label).map(|c| self.levels[c])
    }

    /// Members of two labels share a class.
    pub fn same_class(&self, a: &str, b: &str) -> bool {
        match (self.class_index_of(a), self.class_index_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    /// DOT rendering: one node per class labeled with the comma-joined
    /// member labels, one edge per cover (parent → child), and the α that
    /// produced the diagram as a graph attribute.
    pub fn to_dot(&self) -> String {
        fn quote(s: &str) -> String {
            format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
        }
        let mut out = String::from("digraph hasse {\n");
        out.push_str(&format!("  alpha={};\n", quote(&self.alpha.to_string())));
        let names: Vec<String> = self.classes.iter().map(|c| quote(&c.join(", "))).collect();
        for name in &names {
            out.push_str(&format!("  {name};\n"));
        }
        for &(parent, child) in &self.covers {
            out.push_str(&format!("  {} -> {};\n", names[parent], names[child]));
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the full diagram from a preorder: quotient, transitive reduction,
/// level assignment.
pub fn hasse_diagram(p: &Preorder) -> Result<HasseDiagram, StructureError> {
    let q = quotient(p);
    let covers = transitive_reduction(&q)?;
    let levels = levels(q.len(), &covers);
    Ok(HasseDiagram {
        classes: q.classes,
        covers,
        levels,
        alpha: p.alpha_used.value(),
    })
}

/// Row/column partitions induced by identical vectors after an α-cut, plus
/// the full blocks. The block structure is bifunctional by construction:
/// every 1-cell of the cut matrix lies in exactly one full block.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classivalence {
    pub row_classes: Vec<Vec<String>>,
    pub col_classes: Vec<Vec<String>>,
    /// (row class, column class) pairs whose block is constantly 1.
    pub blocks: Vec<(usize, usize)>,
}

pub fn classivalence(
    r: &FuzzyRelation,
    policy: AlphaPolicy,
) -> Result<Classivalence, StructureError> {
    let cut = alpha_cut(r, policy)?;
    let rows: Vec<Vec<u8>> = cut.rows().map(|r| r.iter().map(|&v| v as u8).collect()).collect();
    let ncols = cut.target().len();
    let cols: Vec<Vec<u8>> = (0..ncols)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect();

    fn group(keys: &[Vec<u8>]) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut reps: Vec<&Vec<u8>> = Vec::new();
        for (i, key) in keys.iter().enumerate() {
            if let Some(c) = reps.iter().position(|r| *r == key) {
                classes[c].push(i);
            } else {
                reps.push(key);
                classes.push(vec![i]);
            }
        }
        classes
    }

    let row_groups = group(&rows);
    let col_groups = group(&cols);
    let mut blocks = Vec::new();
    for (rc, rg) in row_groups.iter().enumerate() {
        for (cc, cg) in col_groups.iter().enumerate() {
            if rows[rg[0]][cg[0]] == 1 {
                blocks.push((rc, cc));
            }
        }
    }
    let label = |set: &LabeledSet, groups: &[Vec<usize>]| -> Vec<Vec<String>> {
        groups
            .iter()
            .map(|g| g.iter().map(|&i| set.label(i).to_string()).collect())
            .collect()
    };
    Ok(Classivalence {
        row_classes: label(cut.source(), &row_groups),
        col_classes: label(cut.target(), &col_groups),
        blocks,
    })
}
