//! Labeled binary and ternary fuzzy relations and the BK relational products.
//!
//! A [`FuzzyRelation`] is a dense matrix of degrees in `[0, 1]` between two
//! finite, ordered label sets. [`compose`] implements the four product types
//! in harsh and mean variants:
//!
//! | product | inner connective | harsh outer | mean outer |
//! |---------|------------------|-------------|------------|
//! | circle  | min              | max over j  | (1/n)·Σj   |
//! | sub  ◁  | a → b            | min over j  | (1/n)·Σj   |
//! | super ▷ | a ← b            | min over j  | (1/n)·Σj   |
//! | square □| a ≡ b            | min over j  | (1/n)·Σj   |
//!
//! Relations are immutable after construction; all operations are pure.

use std::fmt;
use std::io;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::logic::{ConnectiveSystem, LogicError, TNorm, TruthValue};

#[derive(Debug, Error)]
pub enum RelationError {
    #[error("label set must not be empty")]
    EmptyLabels,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("{got} rows for {expected} source labels")]
    RowCount { got: usize, expected: usize },
    #[error("row {row} has {got} entries, expected {expected}")]
    RowLength { row: usize, got: usize, expected: usize },
    #[error("degree {value} at ({row}, {col}) outside [0, 1]")]
    DegreeOutOfRange { row: usize, col: usize, value: f64 },
    #[error("degree matrix has {got} entries, expected {expected}")]
    FlatLength { got: usize, expected: usize },
    #[error("incompatible middle set: target labels of the left operand must equal source labels of the right operand")]
    IncompatibleMiddleSet,
    #[error("relations must have identical source and target labels")]
    ShapeMismatch,
    #[error("alpha {0} outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("axis index {0} out of range for a ternary relation (0..=2)")]
    InvalidAxis(usize),
    #[error("paired axes carry different labels")]
    PairedAxisMismatch,
    #[error("{0}")]
    Logic(#[from] LogicError),
    #[error("CSV relation: {0}")]
    Csv(String),
}

/// An ordered set of unique labels; order is significant and preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledSet {
    labels: Vec<String>,
}

impl LabeledSet {
    pub fn new<I, S>(labels: I) -> Result<Self, RelationError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(RelationError::EmptyLabels);
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(RelationError::DuplicateLabel(l.clone()));
            }
        }
        Ok(LabeledSet { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

impl Serialize for LabeledSet {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
    {
        self.labels.serialize(serializer)
    }
}

/// A fuzzy relation from `source` (rows) to `target` (columns).
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyRelation {
    source: LabeledSet,
    target: LabeledSet,
    degrees: Vec<f64>, // row-major, source.len() * target.len()
}

impl FuzzyRelation {
    pub fn new(
        source: LabeledSet,
        target: LabeledSet,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self, RelationError> {
        if rows.len() != source.len() {
            return Err(RelationError::RowCount { got: rows.len(), expected: source.len() });
        }
        let mut degrees = Vec::with_capacity(source.len() * target.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != target.len() {
                return Err(RelationError::RowLength {
                    row: i,
                    got: row.len(),
                    expected: target.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !(0.0..=1.0).contains(&v) {
                    return Err(RelationError::DegreeOutOfRange { row: i, col: j, value: v });
                }
                degrees.push(v);
            }
        }
        Ok(FuzzyRelation { source, target, degrees })
    }

    pub fn from_flat(
        source: LabeledSet,
        target: LabeledSet,
        degrees: Vec<f64>,
    ) -> Result<Self, RelationError> {
        let expected = source.len() * target.len();
        if degrees.len() != expected {
            return Err(RelationError::FlatLength { got: degrees.len(), expected });
        }
        for (idx, &v) in degrees.iter().enumerate() {
            if !(0.0..=1.0).contains(&v) {
                return Err(RelationError::DegreeOutOfRange {
                    row: idx / target.len(),
                    col: idx % target.len(),
                    value: v,
                });
            }
        }
        Ok(FuzzyRelation { source, target, degrees })
    }

    pub fn from_fn<F>(source: LabeledSet, target: LabeledSet, mut f: F) -> Result<Self, RelationError>
    where
        F: FnMut(usize, usize) -> f64,
    {
        let mut degrees = Vec::with_capacity(source.len() * target.len());
        for i in 0..source.len() {
            for j in 0..target.len() {
                degrees.push(f(i, j));
            }
        }
        Self::from_flat(source, target, degrees)
    }

    /// Internal constructor for values already known to lie in `[0, 1]`.
    pub(crate) fn from_fn_unchecked<F>(source: LabeledSet, target: LabeledSet, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> f64,
    {
        let mut degrees = Vec::with_capacity(source.len() * target.len());
        for i in 0..source.len() {
            for j in 0..target.len() {
                let v = f(i, j);
                debug_assert!((0.0..=1.0).contains(&v), "degree {v} out of range");
                degrees.push(v);
            }
        }
        FuzzyRelation { source, target, degrees }
    }

    /// The crisp identity relation on `set`.
    pub fn identity(set: &LabeledSet) -> Self {
        FuzzyRelation::from_fn_unchecked(set.clone(), set.clone(), |i, j| {
            if i == j {
                1.0
            } else {
                0.0
            }
        })
    }

    pub fn source(&self) -> &LabeledSet {
        &self.source
    }

    pub fn target(&self) -> &LabeledSet {
        &self.target
    }

    pub fn degree(&self, i: usize, j: usize) -> f64 {
        self.degrees[i * self.target.len() + j]
    }

    pub fn is_square(&self) -> bool {
        self.source == self.target
    }

    pub fn is_crisp(&self) -> bool {
        self.degrees.iter().all(|&v| v == 0.0 || v == 1.0)
    }

    /// Arithmetic mean of all entries.
    pub fn mean_degree(&self) -> f64 {
        self.degrees.iter().sum::<f64>() / self.degrees.len() as f64
    }

    pub fn transpose(&self) -> Self {
        FuzzyRelation::from_fn_unchecked(self.target.clone(), self.source.clone(), |i, j| {
            self.degree(j, i)
        })
    }

    /// Largest absolute cellwise difference; relations must share shape.
    pub fn max_abs_diff(&self, other: &FuzzyRelation) -> Result<f64, RelationError> {
        if self.source != other.source || self.target != other.target {
            return Err(RelationError::ShapeMismatch);
        }
        Ok(self
            .degrees
            .iter()
            .zip(&other.degrees)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.degrees.chunks(self.target.len())
    }

    /// Reads the CSV relation format: first row holds the target labels
    /// (first cell blank), each following row a source label and decimal
    /// degrees in `[0, 1]`.
    pub fn from_csv_reader<R: io::Read>(reader: R) -> Result<Self, RelationError> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut records = rdr.records();
        let header = records
            .next()
            .ok_or_else(|| RelationError::Csv("empty document".into()))?
            .map_err(|e| RelationError::Csv(e.to_string()))?;
        if header.len() < 2 {
            return Err(RelationError::Csv("header row needs at least one target label".into()));
        }
        let target = LabeledSet::new(header.iter().skip(1).map(str::to_string))?;
        let mut source_labels = Vec::new();
        let mut rows = Vec::new();
        for (i, rec) in records.enumerate() {
            let rec = rec.map_err(|e| RelationError::Csv(e.to_string()))?;
            if rec.len() != target.len() + 1 {
                return Err(RelationError::Csv(format!(
                    "row {}: {} fields, expected {}",
                    i + 2,
                    rec.len(),
                    target.len() + 1
                )));
            }
            source_labels.push(rec[0].to_string());
            let mut row = Vec::with_capacity(target.len());
            for (j, field) in rec.iter().skip(1).enumerate() {
                let v: f64 = field.parse().map_err(|_| {
                    RelationError::Csv(format!(
                        "row {}, column {}: `{}` is not a decimal degree",
                        i + 2,
                        j + 2,
                        field
                    ))
                })?;
                if !(0.0..=1.0).contains(&v) {
                    return Err(RelationError::Csv(format!(
                        "row {}, column {}: degree {} outside [0, 1]",
                        i + 2,
                        j + 2,
                        v
                    )));
                }
                row.push(v);
            }
            rows.push(row);
        }
        let source = LabeledSet::new(source_labels)?;
        FuzzyRelation::new(source, target, rows)
    }

    pub fn to_csv_string(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.target.labels().iter().cloned());
        wtr.write_record(&header).expect("csv write");
        for (i, row) in self.rows().enumerate() {
            let mut rec = vec![self.source.label(i).to_string()];
            rec.extend(row.iter().map(|v| v.to_string()));
            wtr.write_record(&rec).expect("csv write");
        }
        String::from_utf8(wtr.into_inner().expect("csv flush")).expect("utf8")
    }
}

impl Serialize for FuzzyRelation {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
    {
        let mut st = serializer.serialize_struct("FuzzyRelation", 3)?;
        st.serialize_field("source", self.source.labels())?;
        st.serialize_field("target", self.target.labels())?;
        let rows: Vec<&[f64]> = self.rows().collect();
        st.serialize_field("degrees", &rows)?;
        st.end()
    }
}

/// The four BK product types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductType {
    Circle,
    Sub,
    Super,
    Square,
}

impl FromStr for ProductType {
    type Err = RelationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "circle" => Ok(ProductType::Circle),
            "sub" => Ok(ProductType::Sub),
            "super" => Ok(ProductType::Super),
            "square" => Ok(ProductType::Square),
            other => Err(RelationError::Csv(format!("unknown product type `{other}`"))),
        }
    }
}

/// Harsh products aggregate the inner connective with min/max; mean products
/// replace the outer aggregator by the arithmetic mean over the middle set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Harsh,
    Mean,
}

impl FromStr for Mode {
    type Err = RelationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "harsh" => Ok(Mode::Harsh),
            "mean" => Ok(Mode::Mean),
            other => Err(RelationError::Csv(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductSpec {
    pub product: ProductType,
    pub mode: Mode,
    pub system: ConnectiveSystem,
}

impl ProductSpec {
    pub fn new(product: ProductType, mode: Mode, system: ConnectiveSystem) -> Self {
        ProductSpec { product, mode, system }
    }
}

/// The BK product of `r` and `s`; `r.target` must equal `s.source`.
///
/// The circle product ignores the system's implication: its inner connective
/// is min in both modes.
pub fn compose(
    r: &FuzzyRelation,
    s: &FuzzyRelation,
    spec: ProductSpec,
) -> Result<FuzzyRelation, RelationError> {
    if r.target != s.source {
        return Err(RelationError::IncompatibleMiddleSet);
    }
    let m = r.target.len();
    let inner = |i: usize, j: usize, k: usize| -> f64 {
        let a = r.degree(i, j);
        let b = s.degree(j, k);
        match spec.product {
            ProductType::Circle => a.min(b),
            ProductType::Sub => spec.system.imp_f64(a, b),
            ProductType::Super => spec.system.imp_f64(b, a),
            ProductType::Square => spec.system.eq_f64(a, b),
        }
    };
    Ok(FuzzyRelation::from_fn_unchecked(
        r.source.clone(),
        s.target.clone(),
        |i, k| aggregate(spec.product, spec.mode, m, |j| inner(i, j, k)),
    ))
}

/// Circle composition with an explicit t-norm as the inner connective
/// (harsh outer max). Pairing the residuated t-norm with its implication is
/// what makes the pseudo-associativities and compatibility criteria exact on
/// fuzzy relations.
pub fn circle_compose_tnorm(
    r: &FuzzyRelation,
    s: &FuzzyRelation,
    tnorm: TNorm,
) -> Result<FuzzyRelation, RelationError> {
    if r.target != s.source {
        return Err(RelationError::IncompatibleMiddleSet);
    }
    let m = r.target.len();
    Ok(FuzzyRelation::from_fn_unchecked(
        r.source.clone(),
        s.target.clone(),
        |i, k| {
            (0..m)
                .map(|j| tnorm.apply_f64(r.degree(i, j), s.degree(j, k)))
                .fold(0.0, f64::max)
        },
    ))
}

fn aggregate<F: FnMut(usize) -> f64>(
    product: ProductType,
    mode: Mode,
    n: usize,
    mut inner: F,
) -> f64 {
    match mode {
        Mode::Harsh => match product {
            ProductType::Circle => (0..n).map(&mut inner).fold(0.0, f64::max),
            _ => (0..n).map(&mut inner).fold(1.0, f64::min),
        },
        Mode::Mean => (0..n).map(&mut inner).sum::<f64>() / n as f64,
    }
}

/// Elementwise degree to which `r` is included in `s` (same shape and
/// labels): harsh takes the min over all cells of r → s, mean the average.
pub fn inclusion_degree(
    r: &FuzzyRelation,
    s: &FuzzyRelation,
    mode: Mode,
    system: ConnectiveSystem,
) -> Result<TruthValue, RelationError> {
    if r.source != s.source || r.target != s.target {
        return Err(RelationError::ShapeMismatch);
    }
    let cells = r.degrees.iter().zip(&s.degrees).map(|(&a, &b)| system.imp_f64(a, b));
    let v = match mode {
        Mode::Harsh => cells.fold(1.0, f64::min),
        Mode::Mean => cells.sum::<f64>() / r.degrees.len() as f64,
    };
    Ok(TruthValue::new_unchecked(v))
}

/// α-cut policy: a fixed level, or the arithmetic mean of the relation's
/// entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaPolicy {
    Level(f64),
    MatrixMean,
}

impl AlphaPolicy {
    pub fn level(alpha: f64) -> Result<Self, RelationError> {
        if (0.0..=1.0).contains(&alpha) {
            Ok(AlphaPolicy::Level(alpha))
        } else {
            Err(RelationError::AlphaOutOfRange(alpha))
        }
    }

    /// The numeric α this policy selects for `r`.
    pub fn resolve(self, r: &FuzzyRelation) -> Result<f64, RelationError> {
        match self {
            AlphaPolicy::Level(a) => {
                if (0.0..=1.0).contains(&a) {
                    Ok(a)
                } else {
                    Err(RelationError::AlphaOutOfRange(a))
                }
            }
            AlphaPolicy::MatrixMean => Ok(r.mean_degree()),
        }
    }
}

impl fmt::Display for AlphaPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaPolicy::Level(a) => write!(f, "{a}"),
            AlphaPolicy::MatrixMean => f.write_str("mean"),
        }
    }
}

impl FromStr for AlphaPolicy {
    type Err = RelationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "mean" {
            return Ok(AlphaPolicy::MatrixMean);
        }
        let v: f64 = s
            .parse()
            .map_err(|_| RelationError::Csv(format!("alpha `{s}` is neither a number nor `mean`")))?;
        AlphaPolicy::level(v)
    }
}

impl Serialize for AlphaPolicy {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
    {
        match self {
            AlphaPolicy::Level(a) => serializer.serialize_f64(*a),
            AlphaPolicy::MatrixMean => serializer.serialize_str("mean"),
        }
    }
}

/// Crisp cut of `r`: cell = 1 iff degree ≥ α (closed cut).
pub fn alpha_cut(r: &FuzzyRelation, policy: AlphaPolicy) -> Result<FuzzyRelation, RelationError> {
    let alpha = policy.resolve(r)?;
    Ok(FuzzyRelation::from_fn_unchecked(
        r.source.clone(),
        r.target.clone(),
        |i, j| {
            if r.degree(i, j) >= alpha {
                1.0
            } else {
                0.0
            }
        },
    ))
}

/// A labeled 3-axis array of truth values.
#[derive(Debug, Clone, PartialEq)]
pub struct TernaryRelation {
    axes: [LabeledSet; 3],
    degrees: Vec<f64>,
}

impl TernaryRelation {
    pub fn new(axes: [LabeledSet; 3], degrees: Vec<f64>) -> Result<Self, RelationError> {
        let expected = axes[0].len() * axes[1].len() * axes[2].len();
        if degrees.len() != expected {
            return Err(RelationError::FlatLength { got: degrees.len(), expected });
        }
        for &v in &degrees {
            if !(0.0..=1.0).contains(&v) {
                return Err(RelationError::DegreeOutOfRange { row: 0, col: 0, value: v });
            }
        }
        Ok(TernaryRelation { axes, degrees })
    }

    pub fn from_fn<F>(axes: [LabeledSet; 3], mut f: F) -> Result<Self, RelationError>
    where
        F: FnMut(usize, usize, usize) -> f64,
    {
        let (d0, d1, d2) = (axes[0].len(), axes[1].len(), axes[2].len());
        let mut degrees = Vec::with_capacity(d0 * d1 * d2);
        for i in 0..d0 {
            for j in 0..d1 {
                for k in 0..d2 {
                    degrees.push(f(i, j, k));
                }
            }
        }
        TernaryRelation::new(axes, degrees)
    }

    pub fn axis(&self, i: usize) -> &LabeledSet {
        &self.axes[i]
    }

    pub fn degree(&self, i: usize, j: usize, k: usize) -> f64 {
        self.degrees[(i * self.axes[1].len() + j) * self.axes[2].len() + k]
    }

    fn degree_at(&self, pos: [usize; 3]) -> f64 {
        self.degree(pos[0], pos[1], pos[2])
    }
}

/// A labeled 4-axis array, the output of [`ternary_square`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternaryArray {
    axes: [LabeledSet; 4],
    degrees: Vec<f64>,
}

impl QuaternaryArray {
    pub fn axis(&self, i: usize) -> &LabeledSet {
        &self.axes[i]
    }

    pub fn degree(&self, i: usize, j: usize, l: usize, m: usize) -> f64 {
        let (d1, d2, d3) = (self.axes[1].len(), self.axes[2].len(), self.axes[3].len());
        self.degrees[((i * d1 + j) * d2 + l) * d3 + m]
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }
}

/// Square product of two ternary relations along one shared axis.
///
/// The paired axes of `t` and `u` must carry identical labels; the output is
/// indexed by the two free axes of `t` followed by the two free axes of `u`,
/// in operand order. Each output cell aggregates (min for harsh, mean
/// otherwise) the equivalence degree of the paired slices.
pub fn ternary_square(
    t: &TernaryRelation,
    u: &TernaryRelation,
    paired_axis: usize,
    mode: Mode,
    system: ConnectiveSystem,
) -> Result<QuaternaryArray, RelationError> {
    if paired_axis > 2 {
        return Err(RelationError::InvalidAxis(paired_axis));
    }
    if t.axis(paired_axis) != u.axis(paired_axis) {
        return Err(RelationError::PairedAxisMismatch);
    }
    let free: Vec<usize> = (0..3).filter(|&a| a != paired_axis).collect();
    let (f0, f1) = (free[0], free[1]);
    let axes = [
        t.axis(f0).clone(),
        t.axis(f1).clone(),
        u.axis(f0).clone(),
        u.axis(f1).clone(),
    ];
    let n = t.axis(paired_axis).len();
    let dims = [axes[0].len(), axes[1].len(), axes[2].len(), axes[3].len()];
    let mut degrees = Vec::with_capacity(dims.iter().product());
    let mut tpos = [0usize; 3];
    let mut upos = [0usize; 3];
    for i in 0..dims[0] {
        for j in 0..dims[1] {
            for l in 0..dims[2] {
                for m in 0..dims[3] {
                    tpos[f0] = i;
                    tpos[f1] = j;
                    upos[f0] = l;
                    upos[f1] = m;
                    let cell = (0..n)
                        .map(|k| {
                            tpos[paired_axis] = k;
                            upos[paired_axis] = k;
                            system.eq_f64(t.degree_at(tpos), u.degree_at(upos))
                        })
                        .collect::<Vec<_>>();
                    let v = match mode {
                        Mode::Harsh => cell.iter().copied().fold(1.0, f64::min),
                        Mode::Mean => cell.iter().sum::<f64>() / n as f64,
                    };
                    degrees.push(v);
                }
            }
        }
    }
    Ok(QuaternaryArray { axes, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::ConnectiveSystem as Sys;

    pub(crate) fn set(labels: &[&str]) -> LabeledSet {
        LabeledSet::new(labels.iter().copied()).unwrap()
    }

    pub(crate) fn rel(src: &[&str], tgt: &[&str], rows: &[&[f64]]) -> FuzzyRelation {
        FuzzyRelation::new(set(src), set(tgt), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn labeled_set_invariants() {
        assert!(LabeledSet::new(Vec::<String>::new()).is_err());
        assert!(matches!(
            LabeledSet::new(["a", "b", "a"]),
            Err(RelationError::DuplicateLabel(_))
        ));
        let s = set(&["x", "y"]);
        assert_eq!(s.position("y"), Some(1));
    }

    #[test]
    fn construction_validates_degrees() {
        let err = FuzzyRelation::new(set(&["a"]), set(&["b"]), vec![vec![1.2]]);
        assert!(matches!(err, Err(RelationError::DegreeOutOfRange { .. })));
    }

    #[test]
    fn transpose_examples() {
        let r = rel(&["a"], &["x", "y"], &[&[0.2, 1.0]]);
        let t = r.transpose();
        assert_eq!(t.degree(0, 0), 0.2);
        assert_eq!(t.degree(1, 0), 1.0);
        assert_eq!(t.transpose(), r);
        let id = FuzzyRelation::identity(&set(&["a", "b"]));
        assert_eq!(id.transpose(), id);
    }

    #[test]
    fn circle_harsh_example() {
        let r = rel(&["a", "b"], &["m", "n"], &[&[1.0, 0.0], &[0.5, 0.5]]);
        let s = rel(&["m", "n"], &["x", "y"], &[&[0.2, 1.0], &[1.0, 0.0]]);
        let spec = ProductSpec::new(ProductType::Circle, Mode::Harsh, Sys::Lukasiewicz);
        let out = compose(&r, &s, spec).unwrap();
        assert_eq!(out.degree(0, 0), 0.2);
        assert_eq!(out.degree(0, 1), 1.0);
        assert_eq!(out.degree(1, 0), 0.5);
        assert_eq!(out.degree(1, 1), 0.5);
    }

    #[test]
    fn sub_harsh_crisp_containment() {
        let r = rel(&["x"], &["1", "2", "3"], &[&[1.0, 1.0, 0.0]]);
        let s = rel(&["1", "2", "3"], &["z"], &[&[1.0], &[1.0], &[0.0]]);
        let spec = ProductSpec::new(ProductType::Sub, Mode::Harsh, Sys::StandardSharp);
        assert_eq!(compose(&r, &s, spec).unwrap().degree(0, 0), 1.0);
    }

    #[test]
    fn square_harsh_identity() {
        let id = FuzzyRelation::identity(&set(&["a", "b"]));
        let spec = ProductSpec::new(ProductType::Square, Mode::Harsh, Sys::StandardSharp);
        let out = compose(&id, &id.transpose(), spec).unwrap();
        assert_eq!(out, id);
    }

    #[test]
    fn compose_rejects_mismatched_middle() {
        let r = rel(&["a"], &["m"], &[&[1.0]]);
        let s = rel(&["n"], &["z"], &[&[1.0]]);
        let spec = ProductSpec::new(ProductType::Circle, Mode::Harsh, Sys::Lukasiewicz);
        assert!(matches!(
            compose(&r, &s, spec),
            Err(RelationError::IncompatibleMiddleSet)
        ));
    }

    #[test]
    fn identity_is_neutral_for_circle_harsh() {
        let r = rel(&["a", "b"], &["x", "y", "z"], &[&[0.3, 0.9, 0.0], &[1.0, 0.4, 0.7]]);
        let spec = ProductSpec::new(ProductType::Circle, Mode::Harsh, Sys::Lukasiewicz);
        let left = compose(&FuzzyRelation::identity(r.source()), &r, spec).unwrap();
        let right = compose(&r, &FuzzyRelation::identity(r.target()), spec).unwrap();
        assert_eq!(left, r);
        assert_eq!(right, r);
    }

    #[test]
    fn inclusion_degree_examples() {
        let r = rel(&["a"], &["x"], &[&[0.7]]);
        let s = rel(&["a"], &["x"], &[&[0.4]]);
        let d = inclusion_degree(&r, &s, Mode::Harsh, Sys::Lukasiewicz).unwrap();
        assert!((d.value() - 0.7).abs() < 1e-12);

        // self-inclusion is 1 for crisp relations under every system, and
        // for fuzzy relations whenever the implication is reflexive
        // (KD and KDL have imp(a, a) < 1 for strictly fuzzy a)
        let crisp = rel(&["a", "b"], &["x", "y"], &[&[1.0, 0.0], &[0.0, 1.0]]);
        for sys in Sys::ALL {
            assert_eq!(inclusion_degree(&crisp, &crisp, Mode::Harsh, sys).unwrap().value(), 1.0);
        }
        let any = rel(&["a", "b"], &["x", "y"], &[&[0.2, 0.9], &[0.4, 0.1]]);
        for sys in [
            Sys::Lukasiewicz,
            Sys::Standard,
            Sys::StandardSharp,
            Sys::Gaines,
            Sys::GainesContrapositive,
        ] {
            assert_eq!(inclusion_degree(&any, &any, Mode::Harsh, sys).unwrap().value(), 1.0);
        }

        let cr = rel(&["a"], &["x", "y"], &[&[1.0, 0.0]]);
        let cs = rel(&["a"], &["x", "y"], &[&[1.0, 1.0]]);
        assert_eq!(
            inclusion_degree(&cr, &cs, Mode::Harsh, Sys::StandardSharp).unwrap().value(),
            1.0
        );
        assert_eq!(
            inclusion_degree(&cs, &cr, Mode::Harsh, Sys::StandardSharp).unwrap().value(),
            0.0
        );
    }

    #[test]
    fn alpha_cut_examples() {
        let r = rel(&["a", "b"], &["x", "y"], &[&[0.8, 0.3], &[0.5, 0.9]]);
        let cut = alpha_cut(&r, AlphaPolicy::Level(0.5)).unwrap();
        assert_eq!(cut.rows().flatten().copied().collect::<Vec<_>>(), [1.0, 0.0, 1.0, 1.0]);
        let cut_mean = alpha_cut(&r, AlphaPolicy::MatrixMean).unwrap();
        assert_eq!(
            cut_mean.rows().flatten().copied().collect::<Vec<_>>(),
            [1.0, 0.0, 0.0, 1.0]
        );
        let all = alpha_cut(&r, AlphaPolicy::Level(0.0)).unwrap();
        assert!(all.rows().flatten().all(|&v| v == 1.0));
        assert!(AlphaPolicy::level(1.5).is_err());
    }

    #[test]
    fn harsh_vs_mean_ordering() {
        let r = rel(&["a", "b"], &["m", "n", "o"], &[&[0.2, 0.9, 0.5], &[1.0, 0.1, 0.6]]);
        let s = rel(&["m", "n", "o"], &["x", "y"], &[&[0.3, 0.8], &[0.7, 0.2], &[0.0, 1.0]]);
        for sys in Sys::ALL {
            for product in [ProductType::Sub, ProductType::Super, ProductType::Square] {
                let h = compose(&r, &s, ProductSpec::new(product, Mode::Harsh, sys)).unwrap();
                let m = compose(&r, &s, ProductSpec::new(product, Mode::Mean, sys)).unwrap();
                for i in 0..2 {
                    for k in 0..2 {
                        assert!(h.degree(i, k) <= m.degree(i, k) + 1e-15);
                    }
                }
            }
            // circle flips: max >= mean
            let h = compose(&r, &s, ProductSpec::new(ProductType::Circle, Mode::Harsh, sys)).unwrap();
            let m = compose(&r, &s, ProductSpec::new(ProductType::Circle, Mode::Mean, sys)).unwrap();
            for i in 0..2 {
                for k in 0..2 {
                    assert!(h.degree(i, k) + 1e-15 >= m.degree(i, k));
                }
            }
        }
    }

    #[test]
    fn ternary_square_examples() {
        let axes = || {
            [
                set(&["p1"]),
                set(&["v1"]),
                set(&["c1", "c2"]),
            ]
        };
        let t = TernaryRelation::new(axes(), vec![1.0, 0.0]).unwrap();
        let u = TernaryRelation::new(axes(), vec![1.0, 1.0]).unwrap();
        let harsh = ternary_square(&t, &u, 2, Mode::Harsh, Sys::StandardSharp).unwrap();
        assert_eq!(harsh.degree(0, 0, 0, 0), 0.0);
        let mean = ternary_square(&t, &u, 2, Mode::Mean, Sys::StandardSharp).unwrap();
        assert_eq!(mean.degree(0, 0, 0, 0), 0.5);

        // identical operands with constant entries -> all ones
        let c = TernaryRelation::new(axes(), vec![0.4, 0.4]).unwrap();
        let out = ternary_square(&c, &c, 1, Mode::Harsh, Sys::Lukasiewicz).unwrap();
        assert!(out.degrees().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn ternary_square_middle_axis_pairing() {
        // 2 variants x 2 features x 1 cost; pairing the middle (feature) axis
        // must index the output (variant, cost, variant, cost).
        let axes = [set(&["v1", "v2"]), set(&["y1", "y2"]), set(&["c1"])];
        let t = TernaryRelation::from_fn(axes.clone(), |i, j, _| {
            if i == 0 {
                [1.0, 0.0][j]
            } else {
                [1.0, 1.0][j]
            }
        })
        .unwrap();
        let out = ternary_square(&t, &t, 1, Mode::Harsh, Sys::StandardSharp).unwrap();
        assert_eq!(out.axis(0).labels(), ["v1", "v2"]);
        assert_eq!(out.axis(1).labels(), ["c1"]);
        // v1 vs v2 disagree on feature y2 -> 0; each variant matches itself.
        assert_eq!(out.degree(0, 0, 0, 0), 1.0);
        assert_eq!(out.degree(0, 0, 1, 0), 0.0);
        assert_eq!(out.degree(1, 0, 1, 0), 1.0);
    }

    #[test]
    fn csv_round_trip() {
        let r = rel(&["a", "b"], &["x", "y"], &[&[0.25, 1.0], &[0.0, 0.5]]);
        let text = r.to_csv_string();
        let back = FuzzyRelation::from_csv_reader(text.as_bytes()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_rejects_bad_degrees() {
        let doc = ",x,y\na,0.5,1.2\n";
        assert!(matches!(
            FuzzyRelation::from_csv_reader(doc.as_bytes()),
            Err(RelationError::Csv(_))
        ));
        let doc = ",x,y\na,0.5,oops\n";
        let err = FuzzyRelation::from_csv_reader(doc.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("row 2"));
    }
}
