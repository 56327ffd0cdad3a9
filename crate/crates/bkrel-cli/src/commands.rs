//! The six subcommands: shared input loading, error classification, and
//! deterministic file emission.

use std::fs;
use std::path::Path;

use bkrel::analysis::{
    compare_contexts, compare_objects, cost_interval, dependency_analysis, fire_ranking,
    AnalysisError, DependencyOptions, FireOptions, Polarity,
};
use bkrel::grid::{parse_grid, RepertoryGrid};
use bkrel::properties::{summarize, PropertiesError};
use bkrel::{ConnectiveSystem, FuzzyRelation};

use crate::config::{CliError, OutputFormat, RunConfig};

fn read_grid(path: &Path) -> Result<RepertoryGrid, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_grid(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_relation(path: &Path) -> Result<FuzzyRelation, CliError> {
    let file = fs::File::open(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    FuzzyRelation::from_csv_reader(file)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Analysis errors on already-parsed inputs are contract violations except
/// for data defects discovered inside a pipeline.
fn map_analysis(e: AnalysisError) -> CliError {
    match e {
        AnalysisError::Grid(_) | AnalysisError::ValueCsv(_) => CliError::Input(e.to_string()),
        other => CliError::Contract(other.to_string()),
    }
}

fn map_properties(e: PropertiesError) -> CliError {
    CliError::Contract(e.to_string())
}

fn json_pretty<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))
}

fn emit(cfg: &RunConfig, name: &str, format: OutputFormat, content: &str) -> Result<(), CliError> {
    if !cfg.wants(format) {
        return Ok(());
    }
    fs::create_dir_all(&cfg.out_dir)
        .map_err(|e| CliError::Input(format!("cannot create {}: {e}", cfg.out_dir.display())))?;
    let path = cfg.out_dir.join(name);
    fs::write(&path, content)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

/// File-name token for a system: `S#` becomes `Ssharp`.
fn system_token(system: ConnectiveSystem) -> String {
    system.name().replace('#', "sharp")
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn dependency_options(cfg: &RunConfig) -> DependencyOptions {
    DependencyOptions {
        system: cfg.system(),
        mode: cfg.mode,
        alpha: cfg.alpha,
        alpha_low: cfg.alpha_low,
        scale_map: cfg.scale_map,
    }
}

pub fn cmd_analyze(grid_path: &Path, cfg: &RunConfig) -> Result<(), CliError> {
    let grid = read_grid(grid_path)?;
    let report = dependency_analysis(&grid, &dependency_options(cfg)).map_err(map_analysis)?;
    emit(cfg, "report.json", OutputFormat::Json, &json_pretty(&report)?)?;
    emit(cfg, "hasse.dot", OutputFormat::Dot, &report.hasse.to_dot())?;
    Ok(())
}

pub fn cmd_compare(a_path: &Path, b_path: &Path, cfg: &RunConfig) -> Result<(), CliError> {
    let a = read_grid(a_path)?;
    let b = read_grid(b_path)?;
    let report = compare_objects(&a, &b).map_err(map_analysis)?;
    emit(cfg, "comparison.json", OutputFormat::Json, &json_pretty(&report)?)?;
    emit(cfg, "comparison.csv", OutputFormat::Csv, &report.to_csv())?;
    emit(cfg, "comparison_summary.csv", OutputFormat::Csv, &report.summary_csv())?;
    Ok(())
}

pub fn cmd_contexts(a_path: &Path, b_path: &Path, cfg: &RunConfig) -> Result<(), CliError> {
    let a = read_grid(a_path)?;
    let b = read_grid(b_path)?;
    let report = compare_contexts(&a, &b, &dependency_options(cfg)).map_err(map_analysis)?;
    emit(cfg, "contexts.json", OutputFormat::Json, &json_pretty(&report)?)?;
    emit(
        cfg,
        &format!("hasse_{}.dot", sanitize(&report.context_a.context)),
        OutputFormat::Dot,
        &report.context_a.hasse.to_dot(),
    )?;
    emit(
        cfg,
        &format!("hasse_{}.dot", sanitize(&report.context_b.context)),
        OutputFormat::Dot,
        &report.context_b.hasse.to_dot(),
    )?;
    Ok(())
}

pub fn cmd_rank(values_path: &Path, cfg: &RunConfig) -> Result<(), CliError> {
    let file = fs::File::open(values_path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", values_path.display())))?;
    let table = bkrel::analysis::ValueTable::from_csv_reader(file)
        .map_err(|e| CliError::Input(format!("{}: {e}", values_path.display())))?;

    let mut polarity = vec![Polarity::HigherBetter; table.parameters().len()];
    for (column, pol) in &cfg.polarity {
        match table.parameters().position(column) {
            Some(idx) => polarity[idx] = *pol,
            None => {
                return Err(CliError::Contract(format!(
                    "polarity column `{column}` is not a parameter of {}",
                    values_path.display()
                )))
            }
        }
    }

    let opts = FireOptions { systems: cfg.rank_systems(), alpha: cfg.alpha, mode: cfg.mode };
    let result = fire_ranking(&table, &polarity, &opts).map_err(map_analysis)?;
    for warning in &result.warnings {
        eprintln!("warning: {warning}");
    }
    emit(cfg, "ranks.json", OutputFormat::Json, &json_pretty(&result)?)?;
    emit(cfg, "ranks.csv", OutputFormat::Csv, &result.intervals_csv())?;
    for diagram in &result.diagrams {
        emit(
            cfg,
            &format!("hasse_{}.dot", system_token(diagram.system)),
            OutputFormat::Dot,
            &diagram.hasse.to_dot(),
        )?;
    }
    Ok(())
}

pub fn cmd_cost(grid_path: &Path, cfg: &RunConfig) -> Result<(), CliError> {
    let grid = read_grid(grid_path)?;
    let interval = cost_interval(&grid, None).map_err(map_analysis)?;
    emit(cfg, "cost.json", OutputFormat::Json, &json_pretty(&interval)?)?;
    Ok(())
}

pub fn cmd_props(relation_path: &Path, cfg: &RunConfig) -> Result<(), CliError> {
    let relation = read_relation(relation_path)?;
    let summary = summarize(&relation, cfg.system()).map_err(map_properties)?;
    emit(cfg, "props.json", OutputFormat::Json, &json_pretty(&summary)?)?;
    Ok(())
}
