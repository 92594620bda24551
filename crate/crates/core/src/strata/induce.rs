//! Lusztig–Spaltenstein induction along an embedding of one pseudo-Levi as
//! a Levi subgroup of another, one factor of the larger group at a time.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{FactorEmbedding, PseudoLevi};
use crate::combinat::Partition;
use crate::rootsys::Family;
use crate::unipotent::{self, InductionDatum};
use crate::{Error, Result};

pub(crate) struct InducedTuple {
    /// One candidate unless a type D result is very even.
    pub candidates: Vec<Vec<usize>>,
    pub ambiguous: bool,
}

/// A factor of the smaller group sitting inside a factor of the larger one.
struct Piece<'a> {
    factor: &'a FactorEmbedding,
    images: &'a [usize],
    class: usize,
}

pub(crate) fn induce_tuple(
    sub: &PseudoLevi,
    sup: &PseudoLevi,
    images: &[Vec<usize>],
    tuple: &[usize],
) -> Result<InducedTuple> {
    let mut per_factor: Vec<Vec<Piece<'_>>> = sup.factors.iter().map(|_| Vec::new()).collect();
    for (k, f) in sub.factors.iter().enumerate() {
        let host =
            sup.factors.iter().position(|g| images[k].iter().all(|r| g.to_local.contains_key(r))).ok_or_else(|| {
                Error::Embedding(format!("factor {} of {} spans two factors of {}", f.ty, sub.label, sup.label))
            })?;
        per_factor[host].push(Piece { factor: f, images: &images[k], class: tuple[k] });
    }
    let mut candidates = vec![Vec::new()];
    let mut ambiguous = false;
    for (host, pieces) in sup.factors.iter().zip(&per_factor) {
        let (options, amb) = induce_in_factor(host, pieces)?;
        ambiguous |= amb;
        candidates = candidates
            .into_iter()
            .flat_map(|c| {
                options.iter().map(move |&o| {
                    let mut c = c.clone();
                    c.push(o);
                    c
                })
            })
            .collect();
    }
    Ok(InducedTuple { candidates, ambiguous })
}

fn induce_in_factor(host: &FactorEmbedding, pieces: &[Piece<'_>]) -> Result<(Vec<usize>, bool)> {
    let ty = host.ty;
    let piece_roots: usize = pieces.iter().map(|p| p.factor.ty.num_roots()).sum();
    let expected_dim =
        (ty.num_roots() - piece_roots) as u32 + pieces.iter().map(|p| p.factor.classes[p.class].dim).sum::<u32>();
    let check = |options: Vec<usize>, amb: bool| -> Result<(Vec<usize>, bool)> {
        for &o in &options {
            if host.classes[o].dim != expected_dim {
                return Err(Error::Integrity(format!(
                    "induction to {ty} gives {} of dimension {}, expected {expected_dim}",
                    host.classes[o].label, host.classes[o].dim
                )));
            }
        }
        Ok((options, amb))
    };
    // the whole factor: transport the class
    if let [p] = pieces {
        if p.factor.ty == ty {
            let c = p.factor.class_map(p.images, host)?[p.class];
            return check(vec![c], false);
        }
    }
    let partition_of =
        |p: &Piece<'_>| -> Partition { p.factor.classes[p.class].partition.clone().expect("classical factor") };
    let datum = match ty.family {
        Family::G => {
            let options: Vec<usize> =
                (0..host.classes.len()).filter(|&c| host.classes[c].dim == expected_dim).collect();
            if options.len() != 1 {
                return Err(Error::Integrity(format!("no unique class of dimension {expected_dim} in G2")));
            }
            return Ok((options, false));
        }
        Family::A => {
            let mut gl: Vec<Partition> = pieces.iter().map(partition_of).collect();
            let used: usize = pieces.iter().map(|p| p.factor.ty.rank + 1).sum();
            gl.extend((used..ty.rank + 1).map(|_| vec![1]));
            InductionDatum { family: Family::A, target_size: unipotent::natural_size(ty), gl, core: Vec::new() }
        }
        family => classical_datum(host, pieces, family, &partition_of)?,
    };
    let induced = unipotent::ls_induce(&datum)?;
    let options: Vec<usize> =
        (0..host.classes.len()).filter(|&c| host.classes[c].partition.as_ref() == Some(&induced.partition)).collect();
    if options.is_empty() {
        return Err(Error::Integrity(format!("induced partition {:?} is not a class of {ty}", induced.partition)));
    }
    check(options, induced.ambiguous)
}

/// Splits the pieces inside a classical factor into `GL` blocks and the
/// core, using the coordinates their roots involve.
fn classical_datum(
    host: &FactorEmbedding,
    pieces: &[Piece<'_>],
    family: Family,
    partition_of: &dyn Fn(&Piece<'_>) -> Partition,
) -> Result<InductionDatum> {
    let eps = host.group.root_system().eps_coords().expect("classical type");
    let support = |p: &Piece<'_>| -> BTreeSet<usize> {
        p.images
            .iter()
            .flat_map(|r| {
                let v = &eps[host.to_local[r]];
                (0..v.len()).filter(move |&i| v[i] != 0)
            })
            .collect()
    };
    let supports: Vec<BTreeSet<usize>> = pieces.iter().map(support).collect();
    // group pieces whose supports overlap
    let mut group_of: Vec<usize> = (0..pieces.len()).collect();
    for i in 0..pieces.len() {
        for j in 0..i {
            if !supports[i].is_disjoint(&supports[j]) {
                let (gi, gj) = (group_of[i], group_of[j]);
                for g in group_of.iter_mut() {
                    if *g == gi {
                        *g = gj;
                    }
                }
            }
        }
    }
    let mut gl = Vec::new();
    let mut core_pieces = Vec::new();
    let mut covered = BTreeSet::new();
    for g in group_of.iter().copied().collect::<BTreeSet<_>>() {
        let members: Vec<usize> = (0..pieces.len()).filter(|&i| group_of[i] == g).collect();
        let first = &pieces[members[0]];
        let is_core = members.len() > 1
            || first.factor.ty.family != Family::A
            || supports[members[0]].len() != first.factor.ty.rank + 1;
        for &m in &members {
            covered.extend(supports[m].iter().copied());
        }
        if is_core {
            core_pieces.push(members);
        } else {
            gl.push(partition_of(first));
        }
    }
    if core_pieces.len() > 1 {
        return Err(Error::Algorithm(format!("Levi of {} has two core factors", host.ty)));
    }
    gl.extend((covered.len()..host.ty.rank).map(|_| vec![1]));
    let core = match core_pieces.first() {
        None => match family {
            Family::B => vec![1],
            _ => Vec::new(),
        },
        Some(members) => {
            let ps: Vec<&Piece<'_>> = members.iter().map(|&m| &pieces[m]).collect();
            core_partition(family, &ps, partition_of)?
        }
    };
    Ok(InductionDatum { family, target_size: unipotent::natural_size(host.ty), gl, core })
}

/// Jordan type in the natural representation of the core factor, rewriting
/// the small isomorphisms `B1 = A1`, `C1 = A1`, `D2 = A1×A1`, `D3 = A3`.
fn core_partition(
    family: Family,
    pieces: &[&Piece<'_>],
    partition_of: &dyn Fn(&Piece<'_>) -> Partition,
) -> Result<Partition> {
    let parts: Vec<Partition> = pieces.iter().map(|p| partition_of(p)).collect();
    let types: Vec<_> = pieces.iter().map(|p| p.factor.ty).collect();
    let bad = || Error::Algorithm(format!("unexpected core {types:?} in type {}", family.letter()));
    match (family, parts.as_slice()) {
        (_, [p]) if types[0].family == family => Ok(p.clone()),
        (Family::B, [p]) if types[0].rank == 1 => Ok(if p == &[2] { vec![3] } else { vec![1, 1, 1] }),
        (Family::C, [p]) if types[0].rank == 1 => Ok(p.clone()),
        (Family::D, [p]) if types[0].rank == 3 => Ok(match p.as_slice() {
            [4] => vec![5, 1],
            [3, 1] => vec![3, 3],
            [2, 2] => vec![3, 1, 1, 1],
            [2, 1, 1] => vec![2, 2, 1, 1],
            _ => vec![1; 6],
        }),
        (Family::D, [p, q]) if types[0].rank == 1 && types[1].rank == 1 => Ok(match (p == &[2], q == &[2]) {
            (true, true) => vec![3, 1],
            (false, false) => vec![1; 4],
            _ => vec![2, 2],
        }),
        _ => Err(bad()),
    }
}
