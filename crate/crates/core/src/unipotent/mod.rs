//! Unipotent classes, their dimensions and Springer characters, and
//! Lusztig–Spaltenstein induction for classical types.

mod data;
mod symbols;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

pub use data::{DataEntry, DataFile, Provenance, SpringerData};
pub use symbols::springer_by_symbol;

use crate::combinat::{self, Partition};
use crate::rootsys::{Family, SimpleType};
use crate::weylgrp::{FactorGroup, IrrLabel};
use crate::{Error, Result};

/// A unipotent class of a simple group of adjoint type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentClass {
    pub label: String,
    /// Jordan type in the natural representation (classical types).
    pub partition: Option<Partition>,
    /// `Some(true)` for the class `I` of a very even pair, `Some(false)` for `II`.
    pub very_even: Option<bool>,
    pub dim: u32,
    pub springer: IrrLabel,
}

/// Dimension of the group of type `ty`.
pub fn group_dim(ty: SimpleType) -> u32 {
    (ty.num_roots() + ty.rank) as u32
}

/// Size of the natural representation.
pub fn natural_size(ty: SimpleType) -> u32 {
    let n = ty.rank as u32;
    match ty.family {
        Family::A => n + 1,
        Family::B => 2 * n + 1,
        Family::C | Family::D => 2 * n,
        Family::G => 7,
    }
}

/// Whether `lambda` is the Jordan type of a unipotent element of type
/// `family` (odd parts of even multiplicity for C, even parts of even
/// multiplicity for B and D).
pub fn is_valid(family: Family, lambda: &[u32]) -> bool {
    let forbidden = match family {
        Family::A | Family::G => return true,
        Family::C => 1,
        Family::B | Family::D => 0,
    };
    lambda.iter().filter(|&&p| p % 2 == forbidden).all(|&p| combinat::multiplicity(lambda, p).is_multiple_of(2))
}

pub fn is_very_even(lambda: &[u32]) -> bool {
    !lambda.is_empty()
        && lambda.iter().all(|&p| p.is_multiple_of(2) && combinat::multiplicity(lambda, p).is_multiple_of(2))
}

/// Orbit dimension of the class with Jordan type `lambda`.
pub fn orbit_dim(ty: SimpleType, lambda: &[u32]) -> u32 {
    let t = combinat::transpose(lambda);
    let sq: u32 = t.iter().map(|x| x * x).sum();
    let odd = lambda.iter().filter(|&&p| p % 2 == 1).count() as u32;
    let centralizer = match ty.family {
        Family::A => sq - 1,
        Family::B | Family::D => (sq - odd) / 2,
        Family::C => (sq + odd) / 2,
        Family::G => unreachable!("G2 classes are curated"),
    };
    group_dim(ty) - centralizer
}

pub fn partition_label(lambda: &[u32]) -> String {
    let parts: Vec<String> = lambda.iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join(","))
}

fn class_label(lambda: &[u32], very_even: Option<bool>) -> String {
    let mut s = partition_label(lambda);
    match very_even {
        Some(true) => s.push('I'),
        Some(false) => s.push_str("II"),
        None => {}
    }
    s
}

/// Classes of a classical type from their Jordan types, with Springer
/// characters from the symbol algorithm. Regular class first.
pub fn classical_classes(ty: SimpleType) -> Vec<UnipotentClass> {
    let mut out = Vec::new();
    for lambda in combinat::partitions(natural_size(ty)) {
        if !is_valid(ty.family, &lambda) {
            continue;
        }
        let flags: &[Option<bool>] =
            if ty.family == Family::D && is_very_even(&lambda) { &[Some(true), Some(false)] } else { &[None] };
        for &ve in flags {
            out.push(UnipotentClass {
                label: class_label(&lambda, ve),
                dim: orbit_dim(ty, &lambda),
                springer: springer_by_symbol(ty.family, &lambda, ve).expect("classical family"),
                partition: Some(lambda.clone()),
                very_even: ve,
            });
        }
    }
    out
}

/// Classes of `group` with their Springer characters, checked against the
/// b-identity, injectivity and the regular/subregular/trivial anchors.
/// Type A is computed; other types come from `data`.
pub fn classify(group: &FactorGroup, data: &SpringerData) -> Result<Vec<UnipotentClass>> {
    let ty = group.simple_type();
    let classes = if ty.family == Family::A {
        classical_classes(ty)
    } else {
        let file = data.get(ty).ok_or_else(|| Error::Integrity(format!("no Springer data for {ty}")))?;
        from_data(ty, file)?
    };
    validate(group, &classes)?;
    Ok(classes)
}

fn from_data(ty: SimpleType, file: &DataFile) -> Result<Vec<UnipotentClass>> {
    let labels = |s: &str| -> Result<IrrLabel> { data::parse_irr_label(ty.family, s) };
    if ty.family == Family::G {
        return file
            .classes
            .iter()
            .map(|e| {
                Ok(UnipotentClass {
                    label: e.label.clone(),
                    partition: None,
                    very_even: None,
                    dim: e.dim,
                    springer: labels(&e.springer_label)?,
                })
            })
            .collect();
    }
    let expected = classical_classes(ty);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in &file.classes {
        let class = expected
            .iter()
            .find(|c| c.label == e.label)
            .ok_or_else(|| Error::Integrity(format!("{ty}: {} is not a unipotent class", e.label)))?;
        if !seen.insert(e.label.clone()) {
            return Err(Error::Integrity(format!("{ty}: class {} listed twice", e.label)));
        }
        if class.dim != e.dim {
            return Err(Error::Integrity(format!(
                "{ty}: class {} has dimension {}, data says {}",
                e.label, class.dim, e.dim
            )));
        }
        out.push(UnipotentClass { springer: labels(&e.springer_label)?, ..class.clone() });
    }
    if out.len() != expected.len() {
        return Err(Error::Integrity(format!("{ty}: data lists {} classes, expected {}", out.len(), expected.len())));
    }
    Ok(out)
}

/// Checks the invariants every Springer table must satisfy.
pub fn validate(group: &FactorGroup, classes: &[UnipotentClass]) -> Result<()> {
    let ty = group.simple_type();
    let n_pos = (ty.num_roots() / 2) as u32;
    let mut problems = Vec::new();
    let mut seen = BTreeSet::new();
    for c in classes {
        if c.dim % 2 != 0 || c.dim > 2 * n_pos {
            problems.push(format!("{}: impossible dimension {}", c.label, c.dim));
            continue;
        }
        let Some(idx) = group.labels().iter().position(|l| *l == c.springer) else {
            problems.push(format!("{}: unknown character {}", c.label, c.springer));
            continue;
        };
        let b = group.b_invariants()[idx];
        let expect = n_pos - c.dim / 2;
        if b != expect {
            problems.push(format!("{}: b({}) = {b}, b-identity requires {expect}", c.label, c.springer));
        }
        if !seen.insert(idx) {
            problems.push(format!("{}: character {} already used", c.label, c.springer));
        }
        let anchor = if c.dim == 0 {
            Some(("trivial class", group.b_invariants().iter().position(|&b| b == n_pos)))
        } else if c.dim == 2 * n_pos {
            Some(("regular class", Some(0)))
        } else if c.dim == 2 * n_pos - 2 {
            let refl = (0..group.values().len())
                .find(|&i| group.values()[i][0] == ty.rank as i64 && group.b_invariants()[i] == 1);
            Some(("subregular class", refl))
        } else {
            None
        };
        if let Some((what, want)) = anchor {
            if want != Some(idx) {
                problems.push(format!("{what} {} is not sent to the expected character", c.label));
            }
        }
    }
    if classes.iter().filter(|c| c.dim == 0).count() != 1 || classes.iter().filter(|c| c.dim == 2 * n_pos).count() != 1
    {
        problems.push("trivial and regular classes must be unique".into());
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::Integrity(format!("Springer table of {ty}: {}", problems.join("; "))))
    }
}

/// Largest partition below `lambda` in dominance order that is the Jordan
/// type of a unipotent class of type `family`.
pub fn collapse(family: Family, lambda: &[u32]) -> Result<Partition> {
    let forbidden = match family {
        Family::A => return Ok(lambda.to_vec()),
        Family::G => return Err(Error::InvalidInput("collapse is defined for classical types".into())),
        Family::C => 1,
        Family::B | Family::D => 0,
    };
    let n = combinat::size(lambda);
    let size_ok = match family {
        Family::B => n % 2 == 1,
        _ => n.is_multiple_of(2),
    };
    if !size_ok {
        return Err(Error::InvalidInput(format!(
            "{} has the wrong parity for type {}",
            partition_label(lambda),
            family.letter()
        )));
    }
    let mut p = combinat::normalize(lambda.to_vec());
    loop {
        let Some(q) = p.iter().copied().filter(|&x| x % 2 == forbidden && combinat::multiplicity(&p, x) % 2 == 1).max()
        else {
            return Ok(p);
        };
        let last = p.iter().rposition(|&x| x == q).unwrap();
        p[last] -= 1;
        match p[last + 1..].iter().position(|&x| x < q - 1) {
            Some(off) => p[last + 1 + off] += 1,
            None => p.push(1),
        }
        p = combinat::normalize(p);
    }
}

pub fn dominance_leq(l: &[u32], m: &[u32]) -> Result<bool> {
    if combinat::size(l) != combinat::size(m) {
        return Err(Error::InvalidInput("dominance needs partitions of equal size".into()));
    }
    Ok(combinat::dominated_by(l, m))
}

/// A Levi subgroup `GL(a_1) × … × GL(a_k) × X(core)` of a classical group of
/// type `family`, with a class in each factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionDatum {
    pub family: Family,
    /// Size of the natural representation of the target.
    pub target_size: u32,
    /// Partition of `a_i` for each `GL(a_i)` block.
    pub gl: Vec<Partition>,
    /// Class of the core factor; empty for type A.
    pub core: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub partition: Partition,
    /// Set when the result is very even in type D and the I/II member is
    /// not determined by the partition data.
    pub ambiguous: bool,
}

/// Lusztig–Spaltenstein induction.
pub fn ls_induce(d: &InductionDatum) -> Result<Induced> {
    let gl_total: u32 = d.gl.iter().map(|p| combinat::size(p)).sum();
    let core = combinat::size(&d.core);
    if d.family == Family::A {
        if gl_total != d.target_size || core != 0 {
            return Err(Error::InvalidInput("type A Levi blocks must fill the target".into()));
        }
        let p = d.gl.iter().fold(Vec::new(), |acc, p| combinat::add(&acc, p));
        return Ok(Induced { partition: p, ambiguous: false });
    }
    if d.family == Family::G {
        return Err(Error::InvalidInput("partition induction is defined for classical types".into()));
    }
    if 2 * gl_total + core != d.target_size {
        return Err(Error::InvalidInput(format!(
            "Levi blocks of total size 2·{gl_total} + {core} do not fill {}",
            d.target_size
        )));
    }
    if !is_valid(d.family, &d.core) {
        return Err(Error::InvalidInput(format!("{} is not a class of the core", partition_label(&d.core))));
    }
    let mut lambda = d.core.clone();
    for p in &d.gl {
        let doubled: Partition = p.iter().map(|x| 2 * x).collect();
        lambda = collapse(d.family, &combinat::add(&lambda, &doubled))?;
    }
    let ambiguous = d.family == Family::D && is_very_even(&lambda);
    Ok(Induced { partition: lambda, ambiguous })
}

#[cfg(test)]
mod tests;
