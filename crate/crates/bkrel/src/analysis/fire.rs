//! Interval ranking of items from a numeric value table.
//!
//! Each parameter column is min–max normalized (inverted for
//! lower-is-better columns), the superproduct N ▷ Nᵀ gives the degree to
//! which one item dominates another, and a Hasse diagram is extracted per
//! connective system. An item's rank interval is the [min, max] of its
//! class level across the configured systems.

use std::io;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::AnalysisError;
use crate::logic::ConnectiveSystem;
use crate::relation::{compose, AlphaPolicy, FuzzyRelation, LabeledSet, Mode, ProductSpec, ProductType};
use crate::structure::{hasse_diagram, preorder_of, HasseDiagram};

/// A numeric items × parameters table.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueTable {
    items: LabeledSet,
    parameters: LabeledSet,
    values: Vec<f64>, // row-major
}

impl ValueTable {
    pub fn new(
        items: LabeledSet,
        parameters: LabeledSet,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self, AnalysisError> {
        if rows.len() != items.len() {
            return Err(AnalysisError::ValueCsv(format!(
                "{} rows for {} items",
                rows.len(),
                items.len()
            )));
        }
        let mut values = Vec::with_capacity(items.len() * parameters.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != parameters.len() {
                return Err(AnalysisError::ValueCsv(format!(
                    "row {} has {} values, expected {}",
                    i + 1,
                    row.len(),
                    parameters.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(AnalysisError::ValueCsv(format!(
                        "row {}, column {}: value is not finite",
                        i + 1,
                        j + 1
                    )));
                }
                values.push(v);
            }
        }
        Ok(ValueTable { items, parameters, values })
    }

    /// Reads a CSV with a header row of parameter names (first cell
    /// ignored) and one row per item, first column the item name.
    pub fn from_csv_reader<R: io::Read>(reader: R) -> Result<Self, AnalysisError> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut records = rdr.records();
        let header = records
            .next()
            .ok_or_else(|| AnalysisError::ValueCsv("empty document".into()))?
            .map_err(|e| AnalysisError::ValueCsv(e.to_string()))?;
        if header.len() < 2 {
            return Err(AnalysisError::ValueCsv(
                "header row needs at least one parameter name".into(),
            ));
        }
        let parameters = LabeledSet::new(header.iter().skip(1).map(str::to_string))
            .map_err(|e| AnalysisError::ValueCsv(e.to_string()))?;
        let mut item_names = Vec::new();
        let mut rows = Vec::new();
        for (i, rec) in records.enumerate() {
            let rec = rec.map_err(|e| AnalysisError::ValueCsv(e.to_string()))?;
            if rec.len() != parameters.len() + 1 {
                return Err(AnalysisError::ValueCsv(format!(
                    "row {}: {} fields, expected {}",
                    i + 2,
                    rec.len(),
                    parameters.len() + 1
                )));
            }
            item_names.push(rec[0].to_string());
            let mut row = Vec::with_capacity(parameters.len());
            for (j, field) in rec.iter().skip(1).enumerate() {
                let v: f64 = field.parse().map_err(|_| {
                    AnalysisError::ValueCsv(format!(
                        "row {}, column {}: `{}` is not numeric",
                        i + 2,
                        j + 2,
                        field
                    ))
                })?;
                row.push(v);
            }
            rows.push(row);
        }
        let items = LabeledSet::new(item_names).map_err(|e| AnalysisError::ValueCsv(e.to_string()))?;
        ValueTable::new(items, parameters, rows)
    }

    pub fn items(&self) -> &LabeledSet {
        &self.items
    }

    pub fn parameters(&self) -> &LabeledSet {
        &self.parameters
    }

    pub fn value(&self, item: usize, parameter: usize) -> f64 {
        self.values[item * self.parameters.len() + parameter]
    }
}

/// Whether larger or smaller raw values are preferable in a column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Polarity {
    #[default]
    #[serde(rename = "hi")]
    HigherBetter,
    #[serde(rename = "lo")]
    LowerBetter,
}

impl FromStr for Polarity {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "hi" | "higher" => Ok(Polarity::HigherBetter),
            "lo" | "lower" => Ok(Polarity::LowerBetter),
            other => Err(AnalysisError::ValueCsv(format!(
                "polarity `{other}` is neither `hi` nor `lo`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FireOptions {
    pub systems: Vec<ConnectiveSystem>,
    pub alpha: AlphaPolicy,
    pub mode: Mode,
}

impl Default for FireOptions {
    fn default() -> Self {
        FireOptions {
            systems: vec![
                ConnectiveSystem::Lukasiewicz,
                ConnectiveSystem::Reichenbach,
                ConnectiveSystem::KleeneDienes,
            ],
            alpha: AlphaPolicy::MatrixMean,
            mode: Mode::Mean,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SystemLevel {
    pub system: ConnectiveSystem,
    pub level: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankInterval {
    pub item: String,
    pub low: u32,
    pub high: u32,
    pub per_system: Vec<SystemLevel>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SystemDiagram {
    pub system: ConnectiveSystem,
    pub hasse: HasseDiagram,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FireResult {
    pub mode: Mode,
    pub alpha_policy: AlphaPolicy,
    pub intervals: Vec<RankInterval>,
    pub diagrams: Vec<SystemDiagram>,
    pub warnings: Vec<String>,
}

impl FireResult {
    /// Rank intervals as CSV: item, low, high, then one column per system.
    pub fn intervals_csv(&self) -> String {
        let mut out = String::from("item,low,high");
        for d in &self.diagrams {
            out.push(',');
            out.push_str(d.system.name());
        }
        out.push('\n');
        for r in &self.intervals {
            out.push_str(&format!("{},{},{}", r.item, r.low, r.high));
            for s in &r.per_system {
                out.push_str(&format!(",{}", s.level));
            }
            out.push('\n');
        }
        out
    }
}

/// Min–max normalization per column, inverting lower-is-better columns.
/// Constant columns cannot be normalized and are dropped with a warning.
fn normalize(
    table: &ValueTable,
    polarity: &[Polarity],
) -> Result<(FuzzyRelation, Vec<String>), AnalysisError> {
    let n_items = table.items.len();
    let mut kept: Vec<(usize, f64, f64)> = Vec::new();
    let mut warnings = Vec::new();
    for p in 0..table.parameters.len() {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for i in 0..n_items {
            min = min.min(table.value(i, p));
            max = max.max(table.value(i, p));
        }
        if min == max {
            warnings.push(format!(
                "parameter `{}` is constant; dropped from ranking",
                table.parameters.label(p)
            ));
        } else {
            kept.push((p, min, max));
        }
    }
    if kept.is_empty() {
        return Err(AnalysisError::NoUsableColumns);
    }
    let kept_labels = LabeledSet::new(kept.iter().map(|&(p, _, _)| table.parameters.label(p)))
        .map_err(AnalysisError::Relation)?;
    let normalized = FuzzyRelation::from_fn_unchecked(
        table.items.clone(),
        kept_labels,
        |i, col| {
            let (p, min, max) = kept[col];
            let x = (table.value(i, p) - min) / (max - min);
            match polarity[p] {
                Polarity::HigherBetter => x,
                Polarity::LowerBetter => 1.0 - x,
            }
        },
    );
    Ok((normalized, warnings))
}

pub fn fire_ranking(
    table: &ValueTable,
    polarity: &[Polarity],
    opts: &FireOptions,
) -> Result<FireResult, AnalysisError> {
    if table.items.len() < 2 {
        return Err(AnalysisError::TooFewItems(table.items.len()));
    }
    if polarity.len() != table.parameters.len() {
        return Err(AnalysisError::PolarityLength {
            got: polarity.len(),
            expected: table.parameters.len(),
        });
    }
    if opts.systems.is_empty() {
        return Err(AnalysisError::NoSystems);
    }
    let (normalized, warnings) = normalize(table, polarity)?;
    let normalized_t = normalized.transpose();

    // per-system branches are independent; results are collected in the
    // configured system order regardless of thread count
    let diagrams: Vec<SystemDiagram> = opts
        .systems
        .par_iter()
        .map(|&system| -> Result<SystemDiagram, AnalysisError> {
            let dominance = compose(
                &normalized,
                &normalized_t,
                ProductSpec::new(ProductType::Super, opts.mode, system),
            )?;
            let preorder = preorder_of(&dominance, opts.alpha)?;
            Ok(SystemDiagram { system, hasse: hasse_diagram(&preorder)? })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let intervals = table
        .items
        .labels()
        .iter()
        .map(|item| {
            let per_system: Vec<SystemLevel> = diagrams
                .iter()
                .map(|d| SystemLevel {
                    system: d.system,
                    level: d.hasse.level_of(item).expect("item present in diagram"),
                })
                .collect();
            let low = per_system.iter().map(|s| s.level).min().expect("nonempty systems");
            let high = per_system.iter().map(|s| s.level).max().expect("nonempty systems");
            RankInterval { item: item.clone(), low, high, per_system }
        })
        .collect();

    Ok(FireResult {
        mode: opts.mode,
        alpha_policy: opts.alpha,
        intervals,
        diagrams,
        warnings,
    })
}
