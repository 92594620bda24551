//! Curated Springer tables.
//!
//! One JSON document per type and rank, embedded at build time; a directory
//! of replacement documents can be supplied at run time.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::rootsys::{Family, SimpleType};
use crate::weylgrp::IrrLabel;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub source: String,
    pub method: String,
    pub validation_suite: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataEntry {
    pub label: String,
    pub dim: u32,
    pub springer_label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataFile {
    pub provenance: Provenance,
    pub cartan_type: String,
    pub classes: Vec<DataEntry>,
}

/// Version of the invariant suite run by [`super::validate`].
pub const VALIDATION_SUITE: u32 = 1;

const EMBEDDED: &[(&str, &str)] = &[
    ("B2", include_str!("../../data/B2.json")),
    ("B3", include_str!("../../data/B3.json")),
    ("B4", include_str!("../../data/B4.json")),
    ("B5", include_str!("../../data/B5.json")),
    ("C2", include_str!("../../data/C2.json")),
    ("C3", include_str!("../../data/C3.json")),
    ("C4", include_str!("../../data/C4.json")),
    ("C5", include_str!("../../data/C5.json")),
    ("D4", include_str!("../../data/D4.json")),
    ("D5", include_str!("../../data/D5.json")),
    ("G2", include_str!("../../data/G2.json")),
];

/// Springer tables keyed by type, each with the name of the document it
/// came from.
#[derive(Clone, Debug, Default)]
pub struct SpringerData {
    files: BTreeMap<SimpleType, (String, DataFile)>,
}

impl SpringerData {
    /// Names of the documents a complete data set provides, without the
    /// `.json` extension.
    pub fn file_stems() -> impl Iterator<Item = &'static str> {
        EMBEDDED.iter().map(|(n, _)| *n)
    }

    pub fn embedded() -> Self {
        let mut d = SpringerData::default();
        for (name, text) in EMBEDDED {
            d.insert(&format!("embedded:{name}.json"), text).expect("embedded data parses");
        }
        d
    }

    /// Parses a document and replaces the table for its type.
    pub fn insert(&mut self, origin: &str, text: &str) -> Result<()> {
        let file: DataFile = serde_json::from_str(text).map_err(|e| Error::Data(format!("{origin}: {e}")))?;
        let ct: crate::rootsys::CartanType =
            file.cartan_type.parse().map_err(|e| Error::Data(format!("{origin}: {e}")))?;
        let [ty] = ct.factors() else {
            return Err(Error::Data(format!("{origin}: {} is not irreducible", file.cartan_type)));
        };
        if ty.family == Family::A {
            return Err(Error::Data(format!("{origin}: type A tables are computed, not curated")));
        }
        if file.provenance.validation_suite != VALIDATION_SUITE {
            return Err(Error::Data(format!(
                "{origin}: validated with suite {}, current suite is {VALIDATION_SUITE}",
                file.provenance.validation_suite
            )));
        }
        self.files.insert(*ty, (origin.into(), file));
        Ok(())
    }

    pub fn get(&self, ty: SimpleType) -> Option<&DataFile> {
        self.files.get(&ty).map(|(_, f)| f)
    }

    /// `(type, origin, provenance)` for every loaded table.
    pub fn provenance(&self) -> Vec<(String, String, Provenance)> {
        self.files.iter().map(|(t, (o, f))| (format!("{t}"), o.clone(), f.provenance.clone())).collect()
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Data(format!("malformed partition {s:?}")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let parts = inner
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Data(format!("malformed partition {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
        return Err(Error::Data(format!("{s:?} is not a partition")));
    }
    Ok(parts)
}

/// Parses the display form of an irreducible character label.
pub fn parse_irr_label(family: Family, s: &str) -> Result<IrrLabel> {
    match family {
        Family::A => Ok(IrrLabel::Partition(parse_partition(s)?)),
        Family::G => Ok(IrrLabel::Named(s.into())),
        Family::B | Family::C | Family::D => {
            let (body, sign) = match s.strip_suffix('+') {
                Some(b) => (b, Some(true)),
                None => match s.strip_suffix('-') {
                    Some(b) => (b, Some(false)),
                    None => (s, None),
                },
            };
            let (a, b) = body.split_once("].").ok_or_else(|| Error::Data(format!("malformed bipartition {s:?}")))?;
            let a = parse_partition(&format!("{a}]"))?;
            let b = parse_partition(b)?;
            if family != Family::D {
                return if sign.is_some() {
                    Err(Error::Data(format!("{s:?}: sign tags only occur in type D")))
                } else {
                    Ok(IrrLabel::Bipartition(a, b))
                };
            }
            match (a.cmp(&b), sign) {
                (core::cmp::Ordering::Equal, Some(_)) | (core::cmp::Ordering::Greater, None) => {
                    Ok(IrrLabel::Unordered(a, b, sign))
                }
                _ => Err(Error::Data(format!("{s:?} is not a canonical type D label"))),
            }
        }
    }
}
