//! Output documents. JSON is the source of truth; markdown is a summary
//! for reading.

use std::fmt::Write;

use serde::Serialize;
use weyl_strata_core::repops::BInvariantTable;
use weyl_strata_core::strata::{Analysis, Check, GroupSpec};
use weyl_strata_core::unipotent::SpringerData;
use weyl_strata_core::weylgrp::WeylGroup;

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report documents serialize");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub schema_version: u32,
    pub error: &'static str,
    pub message: String,
    pub violations: Vec<Check>,
}

#[derive(Debug, Serialize)]
pub struct Group {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub total_rank: usize,
    pub characteristic: u32,
    pub dim: u32,
}

impl Group {
    fn new(spec: &GroupSpec) -> Self {
        Group {
            cartan_type: spec.cartan_type.to_string(),
            total_rank: spec.total_rank,
            characteristic: spec.characteristic,
            dim: spec.dim(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DataFileInfo {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub origin: String,
    pub source: String,
    pub method: String,
    pub validation_suite: u32,
}

#[derive(Debug, Serialize)]
pub struct PseudoLeviInfo {
    pub label: String,
    #[serde(rename = "type")]
    pub cartan_type: String,
    /// Simple roots in the coordinates of the simple roots of `G`.
    pub base: Vec<Vec<i64>>,
    pub is_levi: bool,
    pub central_torus_rank: usize,
    pub excluded_primes: Vec<u32>,
    pub multiplicity: u64,
}

#[derive(Debug, Serialize)]
pub struct LeviPairInfo {
    pub sub: String,
    pub sup: String,
    pub embeddings: usize,
    /// Pairs come from the criterion `L = C_{L'}(Z(L)°)`; a semisimple
    /// element realizing the degeneration is assumed, not constructed.
    pub realization_assumed: bool,
}

#[derive(Debug, Serialize)]
pub struct JordanInfo {
    pub label: String,
    pub pseudo_levi: String,
    pub unipotent: String,
    pub orbit_dim: u32,
    pub multiplicity: u64,
    pub springer: String,
    pub phi: String,
}

#[derive(Debug, Serialize)]
pub struct SheetInfo {
    pub generator: String,
    pub orbit_dim: u32,
    pub multiplicity: u64,
    /// Jordan classes in the regular closure of the generator.
    pub jordan_classes: Vec<String>,
    pub ambiguous_pair: bool,
}

#[derive(Debug, Serialize)]
pub struct StratumInfo {
    pub phi: String,
    pub orbit_dim: u32,
    pub jordan_classes: Vec<String>,
    pub sheets: Vec<String>,
    pub components: u64,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub pseudo_levis: usize,
    pub jordan_classes: u64,
    pub sheets: u64,
    pub strata: usize,
    pub all_passed: bool,
}

#[derive(Debug, Serialize)]
pub struct Decomposition {
    pub schema_version: u32,
    pub group: Group,
    pub data_files: Vec<DataFileInfo>,
    pub summary: Summary,
    pub pseudo_levis: Vec<PseudoLeviInfo>,
    pub levi_pairs: Vec<LeviPairInfo>,
    pub jordan_classes: Vec<JordanInfo>,
    pub sheets: Vec<SheetInfo>,
    pub strata: Vec<StratumInfo>,
    pub checks: Vec<Check>,
    /// Central cosets are counted only for `L = G`.
    pub coset_refinement: &'static str,
}

fn data_files(data: &SpringerData) -> Vec<DataFileInfo> {
    data.provenance()
        .into_iter()
        .map(|(t, origin, p)| DataFileInfo {
            cartan_type: t,
            origin,
            source: p.source,
            method: p.method,
            validation_suite: p.validation_suite,
        })
        .collect()
}

impl Decomposition {
    pub fn new(a: &Analysis, data: &SpringerData) -> Self {
        let rs = &a.root_system;
        let jl = |i: usize| a.jordan_classes[i].label.clone();
        Decomposition {
            schema_version: SCHEMA_VERSION,
            group: Group::new(&a.spec),
            data_files: data_files(data),
            summary: Summary {
                pseudo_levis: a.pseudo_levis.len(),
                jordan_classes: a.jordan_count(),
                sheets: a.sheet_count(),
                strata: a.strata.len(),
                all_passed: a.all_passed(),
            },
            pseudo_levis: a
                .pseudo_levis
                .iter()
                .map(|l| PseudoLeviInfo {
                    label: l.label.clone(),
                    cartan_type: l.cartan_type.to_string(),
                    base: l.base.iter().map(|&b| rs.root(b).to_vec()).collect(),
                    is_levi: l.is_levi,
                    central_torus_rank: l.central_torus_rank,
                    excluded_primes: l.excluded_primes.clone(),
                    multiplicity: l.multiplicity,
                })
                .collect(),
            levi_pairs: a
                .levi_pairs
                .iter()
                .map(|p| LeviPairInfo {
                    sub: a.pseudo_levis[p.sub].label.clone(),
                    sup: a.pseudo_levis[p.sup].label.clone(),
                    embeddings: p.embeddings,
                    realization_assumed: true,
                })
                .collect(),
            jordan_classes: a
                .jordan_classes
                .iter()
                .map(|j| {
                    let l = &a.pseudo_levis[j.levi];
                    JordanInfo {
                        label: j.label.clone(),
                        pseudo_levi: l.label.clone(),
                        unipotent: l.class_label(&j.classes),
                        orbit_dim: j.orbit_dim,
                        multiplicity: j.multiplicity,
                        springer: l.weyl().labels()[j.springer].to_string(),
                        phi: a.phi_label(j.phi),
                    }
                })
                .collect(),
            sheets: a
                .sheets
                .iter()
                .map(|s| SheetInfo {
                    generator: jl(s.generator),
                    orbit_dim: s.orbit_dim,
                    multiplicity: s.multiplicity,
                    jordan_classes: s.members.iter().map(|&m| jl(m)).collect(),
                    ambiguous_pair: s.ambiguous_pair,
                })
                .collect(),
            strata: a
                .strata
                .iter()
                .map(|s| StratumInfo {
                    phi: a.phi_label(s.phi),
                    orbit_dim: s.orbit_dim,
                    jordan_classes: s.classes.iter().map(|&c| jl(c)).collect(),
                    sheets: s.sheets.iter().map(|&i| jl(a.sheets[i].generator)).collect(),
                    components: s.components,
                })
                .collect(),
            checks: a.checks.clone(),
            coset_refinement: "central cosets counted for L = G only",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub schema_version: u32,
    pub group: Group,
    pub all_passed: bool,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn new(spec: &GroupSpec, checks: Vec<Check>) -> Self {
        Verification {
            schema_version: SCHEMA_VERSION,
            group: Group::new(spec),
            all_passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CharacterRow {
    pub label: String,
    pub dim: i64,
    pub b: u32,
    pub fake_degree: Vec<i64>,
    pub values: Vec<i64>,
}

#[derive(Debug, Serialize)]
pub struct CharacterTable {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub characters: Vec<CharacterRow>,
}

impl CharacterTable {
    pub fn new(w: &WeylGroup, b: &BInvariantTable) -> Self {
        let dump = w.dump();
        CharacterTable {
            schema_version: SCHEMA_VERSION,
            cartan_type: dump.cartan_type,
            order: dump.order,
            class_sizes: dump.class_sizes,
            characters: b
                .rows
                .iter()
                .zip(dump.values)
                .map(|(r, values)| CharacterRow {
                    label: r.label.clone(),
                    dim: r.dim,
                    b: r.b,
                    fake_degree: r.fake_degree.clone(),
                    values,
                })
                .collect(),
        }
    }
}

fn row(out: &mut String, cells: &[String]) {
    let cells: Vec<String> = cells.iter().map(|c| c.replace('|', "\\|")).collect();
    let _ = writeln!(out, "| {} |", cells.join(" | "));
}

fn header(out: &mut String, cells: &[&str]) {
    row(out, &cells.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    row(out, &cells.iter().map(|_| "---".to_string()).collect::<Vec<_>>());
}

pub fn decomposition_markdown(d: &Decomposition) -> String {
    let mut out = String::new();
    let g = &d.group;
    let _ = writeln!(
        out,
        "# {} (total rank {}, characteristic {})\n\ndim G = {}; {} pseudo-Levis, {} Jordan classes, {} sheets, {} strata.\n",
        g.cartan_type,
        g.total_rank,
        g.characteristic,
        g.dim,
        d.summary.pseudo_levis,
        d.summary.jordan_classes,
        d.summary.sheets,
        d.summary.strata
    );
    let _ = writeln!(out, "## Strata\n");
    header(&mut out, &["stratum", "dim", "Jordan classes", "sheets", "components"]);
    for s in &d.strata {
        row(
            &mut out,
            &[
                format!("`{}`", s.phi),
                s.orbit_dim.to_string(),
                s.jordan_classes.len().to_string(),
                s.sheets.len().to_string(),
                s.components.to_string(),
            ],
        );
    }
    let _ = writeln!(out, "\n## Sheets\n");
    header(&mut out, &["generator", "dim", "multiplicity", "Jordan classes"]);
    for s in &d.sheets {
        row(
            &mut out,
            &[
                format!("`{}`", s.generator),
                s.orbit_dim.to_string(),
                s.multiplicity.to_string(),
                s.jordan_classes.iter().map(|j| format!("`{j}`")).collect::<Vec<_>>().join(", "),
            ],
        );
    }
    let _ = writeln!(out, "\n## Checks\n");
    header(&mut out, &["check", "passed", "cases"]);
    for c in &d.checks {
        row(&mut out, &[c.name.clone(), c.passed.to_string(), c.checked.to_string()]);
    }
    out
}

pub fn verification_markdown(v: &Verification) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# Verification of {} (characteristic {}): {}\n",
        v.group.cartan_type,
        v.group.characteristic,
        if v.all_passed { "pass" } else { "FAIL" }
    );
    header(&mut out, &["check", "passed", "cases", "first failure"]);
    for c in &v.checks {
        row(
            &mut out,
            &[
                c.name.clone(),
                c.passed.to_string(),
                c.checked.to_string(),
                c.failures.first().cloned().unwrap_or_default(),
            ],
        );
    }
    out
}

pub fn chartab_markdown(t: &CharacterTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# W({}), order {}\n", t.cartan_type, t.order);
    let mut cols = vec!["character".to_string(), "dim".to_string(), "b".to_string()];
    cols.extend(t.class_sizes.iter().enumerate().map(|(i, s)| format!("c{i} ({s})")));
    row(&mut out, &cols);
    row(&mut out, &cols.iter().map(|_| "---".to_string()).collect::<Vec<_>>());
    for c in &t.characters {
        let mut cells = vec![format!("`{}`", c.label), c.dim.to_string(), c.b.to_string()];
        cells.extend(c.values.iter().map(|v| v.to_string()));
        row(&mut out, &cells);
    }
    out
}
