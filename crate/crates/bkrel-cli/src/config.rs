//! Run configuration assembled from defaults, an optional TOML config
//! file, and command-line flags, in rising precedence.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use bkrel::analysis::Polarity;
use bkrel::grid::ScaleMap;
use bkrel::{AlphaPolicy, ConnectiveSystem, Mode};
use serde::Deserialize;

/// Errors carry the process exit code: 2 for unreadable or malformed
/// inputs, 3 for contract violations, 4 for internal invariant failures.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Contract(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Contract(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Contract(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "dot" => Ok(OutputFormat::Dot),
            other => Err(CliError::Contract(format!(
                "unknown format `{other}` (expected json, csv or dot)"
            ))),
        }
    }
}

/// Optional config-file schema; every field mirrors a flag.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    system: Option<String>,
    systems: Option<Vec<String>>,
    mode: Option<String>,
    alpha: Option<toml::Value>,
    alpha_low: Option<f64>,
    scale_map: Option<String>,
    out_dir: Option<String>,
    polarity: Option<BTreeMap<String, String>>,
    format: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// None means "not configured": single-system commands use L, ranking
    /// uses the (L, KDL, KD) triple.
    systems: Option<Vec<ConnectiveSystem>>,
    pub mode: Mode,
    pub alpha: AlphaPolicy,
    pub alpha_low: Option<f64>,
    pub scale_map: ScaleMap,
    pub polarity: Vec<(String, Polarity)>,
    pub out_dir: PathBuf,
    /// None writes every produced file; otherwise only the listed formats.
    pub formats: Option<Vec<OutputFormat>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            systems: None,
            mode: Mode::Mean,
            alpha: AlphaPolicy::MatrixMean,
            alpha_low: None,
            scale_map: ScaleMap::Affine7,
            polarity: Vec::new(),
            out_dir: PathBuf::from("."),
            formats: None,
        }
    }
}

impl RunConfig {
    pub fn system(&self) -> ConnectiveSystem {
        self.systems
            .as_ref()
            .and_then(|s| s.first().copied())
            .unwrap_or(ConnectiveSystem::Lukasiewicz)
    }

    pub fn rank_systems(&self) -> Vec<ConnectiveSystem> {
        self.systems.clone().unwrap_or_else(|| {
            vec![
                ConnectiveSystem::Lukasiewicz,
                ConnectiveSystem::Reichenbach,
                ConnectiveSystem::KleeneDienes,
            ]
        })
    }

    pub fn wants(&self, format: OutputFormat) -> bool {
        match &self.formats {
            None => true,
            Some(list) => list.contains(&format),
        }
    }

    fn apply_file(&mut self, file: FileConfig) -> Result<(), CliError> {
        if let Some(list) = file.systems {
            self.systems = Some(parse_systems(&list)?);
        }
        if let Some(s) = file.system {
            self.systems = Some(vec![parse_system(&s)?]);
        }
        if let Some(m) = file.mode {
            self.mode = parse_mode(&m)?;
        }
        if let Some(a) = file.alpha {
            self.alpha = parse_alpha_value(&a)?;
        }
        if let Some(low) = file.alpha_low {
            self.alpha_low = Some(low);
        }
        if let Some(s) = file.scale_map {
            self.scale_map = parse_scale_map(&s)?;
        }
        if let Some(dir) = file.out_dir {
            self.out_dir = PathBuf::from(dir);
        }
        if let Some(map) = file.polarity {
            self.polarity = map
                .into_iter()
                .map(|(col, pol)| Ok((col, parse_polarity(&pol)?)))
                .collect::<Result<_, CliError>>()?;
        }
        if let Some(formats) = file.format {
            self.formats = Some(
                formats
                    .iter()
                    .map(|f| f.parse())
                    .collect::<Result<_, _>>()?,
            );
        }
        Ok(())
    }

    /// defaults < config file < flags
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        config_path: Option<&PathBuf>,
        systems: &[String],
        mode: Option<&str>,
        alpha: Option<&str>,
        alpha_low: Option<f64>,
        scale_map: Option<&str>,
        polarity: &[String],
        out_dir: Option<&PathBuf>,
        formats: &[String],
    ) -> Result<RunConfig, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = config_path {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Input(format!("cannot read config {}: {e}", path.display()))
            })?;
            let file: FileConfig = toml::from_str(&text).map_err(|e| {
                CliError::Input(format!("config {}: {e}", path.display()))
            })?;
            cfg.apply_file(file)?;
        }
        if !systems.is_empty() {
            cfg.systems = Some(parse_systems(systems)?);
        }
        if let Some(m) = mode {
            cfg.mode = parse_mode(m)?;
        }
        if let Some(a) = alpha {
            cfg.alpha = parse_alpha(a)?;
        }
        if let Some(low) = alpha_low {
            cfg.alpha_low = Some(low);
        }
        if let Some(s) = scale_map {
            cfg.scale_map = parse_scale_map(s)?;
        }
        if !polarity.is_empty() {
            cfg.polarity = polarity
                .iter()
                .map(|spec| {
                    let (col, pol) = spec.split_once('=').ok_or_else(|| {
                        CliError::Contract(format!(
                            "polarity `{spec}` must have the form column=hi|lo"
                        ))
                    })?;
                    Ok((col.trim().to_string(), parse_polarity(pol)?))
                })
                .collect::<Result<_, CliError>>()?;
        }
        if let Some(dir) = out_dir {
            cfg.out_dir = dir.clone();
        }
        if !formats.is_empty() {
            cfg.formats = Some(formats.iter().map(|f| f.parse()).collect::<Result<_, _>>()?);
        }
        if let Some(low) = cfg.alpha_low {
            if !(0.0..=1.0).contains(&low) {
                return Err(CliError::Contract(format!("alpha-low {low} out of range [0, 1]")));
            }
        }
        Ok(cfg)
    }
}

fn parse_system(s: &str) -> Result<ConnectiveSystem, CliError> {
    s.parse().map_err(|e: bkrel::LogicError| CliError::Contract(e.to_string()))
}

fn parse_systems(list: &[String]) -> Result<Vec<ConnectiveSystem>, CliError> {
    if list.is_empty() {
        return Err(CliError::Contract("need at least one system".into()));
    }
    list.iter().map(|s| parse_system(s)).collect()
}

fn parse_mode(s: &str) -> Result<Mode, CliError> {
    s.parse().map_err(|_| CliError::Contract(format!("unknown mode `{s}` (harsh or mean)")))
}

fn parse_alpha(s: &str) -> Result<AlphaPolicy, CliError> {
    s.parse().map_err(|_| {
        CliError::Contract(format!("alpha `{s}` out of range (a number in [0, 1], or `mean`)"))
    })
}

fn parse_alpha_value(v: &toml::Value) -> Result<AlphaPolicy, CliError> {
    match v {
        toml::Value::String(s) => parse_alpha(s),
        toml::Value::Float(f) => AlphaPolicy::level(*f)
            .map_err(|e| CliError::Contract(e.to_string())),
        toml::Value::Integer(i) => AlphaPolicy::level(*i as f64)
            .map_err(|e| CliError::Contract(e.to_string())),
        other => Err(CliError::Contract(format!("alpha `{other}` is neither a number nor `mean`"))),
    }
}

fn parse_scale_map(s: &str) -> Result<ScaleMap, CliError> {
    s.parse().map_err(|e: bkrel::grid::GridError| CliError::Contract(e.to_string()))
}

fn parse_polarity(s: &str) -> Result<Polarity, CliError> {
    s.parse().map_err(|e: bkrel::analysis::AnalysisError| CliError::Contract(e.to_string()))
}
