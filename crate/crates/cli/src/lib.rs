//! Command-line front end: configuration, data loading, report rendering
//! and exit codes. `main.rs` only parses arguments and prints.

pub mod config;
pub mod report;

use std::path::PathBuf;

use weyl_strata_core::rootsys::{CartanType, RootSystem};
use weyl_strata_core::strata::{Analysis, Check, Engine};
use weyl_strata_core::weylgrp::WeylGroup;
use weyl_strata_core::{repops, Error as CoreError};

pub use config::{Format, RunConfig};

/// Environment variable naming a directory of curated Springer tables.
pub const DATA_ENV: &str = "WEYL_STRATA_DATA";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("integrity error: {message}")]
    Integrity { message: String, violations: Vec<Check> },
    #[error("cannot write {path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Output { .. } => 2,
            CliError::Integrity { .. } => 3,
        }
    }

    /// Machine-readable description for standard error.
    pub fn report(&self) -> String {
        let (kind, message, violations) = match self {
            CliError::Config(m) => ("config", m.clone(), Vec::new()),
            CliError::Integrity { message, violations } => ("integrity", message.clone(), violations.clone()),
            CliError::Output { .. } => ("output", self.to_string(), Vec::new()),
        };
        let doc = report::ErrorReport { schema_version: report::SCHEMA_VERSION, error: kind, message, violations };
        report::to_json(&doc)
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Config(_) | CoreError::InvalidInput(_) | CoreError::Resource { .. } => {
                CliError::Config(e.to_string())
            }
            CoreError::Algorithm(_) | CoreError::Embedding(_) | CoreError::Integrity(_) | CoreError::Data(_) => {
                CliError::Integrity { message: e.to_string(), violations: Vec::new() }
            }
        }
    }
}

/// What a subcommand produced: the document, and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub document: String,
    pub code: i32,
}

fn engine(cfg: &RunConfig) -> Result<Engine, CliError> {
    let data = config::load_data(std::env::var_os(DATA_ENV).map(PathBuf::from).as_deref())?;
    let engine = Engine::new(cfg.caps(), data);
    // replaced tables are validated up front, whether or not this run needs them
    for (ty, origin, _) in engine.springer_data().provenance() {
        if !origin.starts_with("embedded:") {
            let ct: CartanType = ty.parse()?;
            for &t in ct.factors() {
                engine.unipotent_classes(t)?;
            }
        }
    }
    Ok(engine)
}

fn analyze(cfg: &RunConfig) -> Result<(Engine, Analysis), CliError> {
    let spec = cfg.spec()?;
    let engine = engine(cfg)?;
    let analysis = engine.analyze(&spec)?;
    Ok((engine, analysis))
}

/// `compute`: the decomposition document. Failed theorem checks are an
/// integrity error.
pub fn compute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (engine, analysis) = analyze(cfg)?;
    let failed: Vec<Check> = analysis.checks.iter().filter(|c| !c.passed).cloned().collect();
    if !failed.is_empty() {
        return Err(CliError::Integrity {
            message: "the decomposition fails its own checks".into(),
            violations: failed,
        });
    }
    let doc = report::Decomposition::new(&analysis, engine.springer_data());
    let document = match cfg.format {
        Format::Json => report::to_json(&doc),
        Format::Markdown => report::decomposition_markdown(&doc),
    };
    Ok(Outcome { document, code: 0 })
}

/// `verify`: the theorem checks and the invariant suite. Exit 1 if anything
/// fails, including an error while computing.
pub fn verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = cfg.spec()?;
    let failed = |message: String| {
        vec![Check { name: "computation".into(), passed: false, checked: 1, failures: vec![message] }]
    };
    let checks = match engine(cfg) {
        Ok(engine) => match engine.analyze(&spec).and_then(|a| a.invariant_suite(&engine)).map_err(CliError::from) {
            Ok(checks) => checks,
            Err(CliError::Integrity { message, .. }) => failed(message),
            Err(e) => return Err(e),
        },
        Err(CliError::Integrity { message, .. }) => failed(message),
        Err(e) => return Err(e),
    };
    let doc = report::Verification::new(&spec, checks);
    let code = if doc.all_passed { 0 } else { 1 };
    let document = match cfg.format {
        Format::Json => report::to_json(&doc),
        Format::Markdown => report::verification_markdown(&doc),
    };
    Ok(Outcome { document, code })
}

/// `chartab`: the character table with b-invariants and fake degrees.
pub fn chartab(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = cfg.spec()?;
    let engine = engine(cfg)?;
    let rs = RootSystem::build(&spec.cartan_type, engine.caps())?;
    let w: WeylGroup = engine.groups().weyl_group(&rs)?;
    let doc = report::CharacterTable::new(&w, &repops::b_invariant_table(&w));
    let document = match cfg.format {
        Format::Json => report::to_json(&doc),
        Format::Markdown => report::chartab_markdown(&doc),
    };
    Ok(Outcome { document, code: 0 })
}
