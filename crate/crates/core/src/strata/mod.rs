//! Pseudo-Levi subgroups, Jordan classes, sheets and strata of a reductive
//! group, and the checks that the strata are locally closed unions of
//! sheets.
//!
//! A Jordan class is modelled by a pseudo-Levi subsystem (up to `W`) and a
//! unipotent class of it (up to the normalizer). Central translates are
//! counted as a multiplicity on classes whose pseudo-Levi is the whole
//! group; other coset refinements are not separated.

mod induce;
mod pseudo;
mod suite;

pub use suite::{b_invariant_check, springer_check, table_check};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::linalg;
use crate::repops;
use crate::rootsys::{classify_subsystem, CartanType, Family, RootSubsystem, RootSystem, SimpleType};
use crate::unipotent::{self, SpringerData, UnipotentClass};
use crate::weylgrp::{class_fusion, compose, invert, FactorGroup, GroupCache, Perm, WeylGroup};
use crate::{Caps, Error, Result};

pub use pseudo::RootSet;

/// A connected reductive group with simply connected derived subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub cartan_type: CartanType,
    /// Rank of the maximal torus; the central torus has rank
    /// `total_rank − rank(cartan_type)`.
    pub total_rank: usize,
    /// `0` or a prime.
    pub characteristic: u32,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl GroupSpec {
    pub fn new(cartan_type: CartanType, total_rank: Option<usize>, characteristic: u32) -> Result<Self> {
        if cartan_type.is_torus() {
            return Err(Error::Config("the semisimple type must be nonempty".into()));
        }
        let rank = cartan_type.rank();
        let total_rank = total_rank.unwrap_or(rank);
        if total_rank < rank {
            return Err(Error::Config(format!(
                "total rank {total_rank} is below the semisimple rank {rank} of {cartan_type}"
            )));
        }
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::Config(format!("characteristic {characteristic} is neither 0 nor a prime")));
        }
        Ok(GroupSpec { cartan_type, total_rank, characteristic })
    }

    /// Dimension of the group.
    pub fn dim(&self) -> u32 {
        (self.cartan_type.num_roots() + self.total_rank) as u32
    }
}

/// Shared tables: Weyl groups, character tables and Springer data.
#[derive(Debug)]
pub struct Engine {
    groups: GroupCache,
    data: SpringerData,
    unipotent: RefCell<BTreeMap<SimpleType, Arc<Vec<UnipotentClass>>>>,
}

impl Engine {
    pub fn new(caps: Caps, data: SpringerData) -> Self {
        Engine { groups: GroupCache::new(caps), data, unipotent: RefCell::new(BTreeMap::new()) }
    }

    pub fn caps(&self) -> &Caps {
        self.groups.caps()
    }

    pub fn groups(&self) -> &GroupCache {
        &self.groups
    }

    pub fn springer_data(&self) -> &SpringerData {
        &self.data
    }

    /// Validated unipotent classes of an irreducible type.
    pub fn unipotent_classes(&self, ty: SimpleType) -> Result<Arc<Vec<UnipotentClass>>> {
        if let Some(c) = self.unipotent.borrow().get(&ty) {
            return Ok(c.clone());
        }
        let group = self.groups.factor(ty)?;
        let classes = Arc::new(unipotent::classify(&group, &self.data)?);
        self.unipotent.borrow_mut().insert(ty, classes.clone());
        Ok(classes)
    }

    /// Runs the whole pipeline for one group.
    pub fn analyze(&self, spec: &GroupSpec) -> Result<Analysis> {
        Analysis::build(self, spec)
    }
}

/// One irreducible factor of a subsystem, with its roots matched to those of
/// the standard root system of its type.
#[derive(Clone, Debug)]
pub(crate) struct FactorEmbedding {
    pub ty: SimpleType,
    /// Simple roots in Bourbaki order, as ambient root indices.
    pub base: Vec<usize>,
    /// Ambient root index → root index in `group`'s root system.
    pub to_local: BTreeMap<usize, usize>,
    pub group: Arc<FactorGroup>,
    pub classes: Arc<Vec<UnipotentClass>>,
}

impl FactorEmbedding {
    fn new(engine: &Engine, rs: &RootSystem, ty: SimpleType, base: &[usize]) -> Result<Self> {
        let group = engine.groups.factor(ty)?;
        let mut to_local = BTreeMap::new();
        for (l, c) in group.root_system().roots().iter().enumerate() {
            let mut v = vec![0i64; rs.rank()];
            for (coef, &b) in c.iter().zip(base) {
                for (x, y) in v.iter_mut().zip(rs.root(b)) {
                    *x += coef * y;
                }
            }
            let g = rs
                .index_of(&v)
                .ok_or_else(|| Error::Embedding(format!("{ty} subsystem does not close in the ambient roots")))?;
            to_local.insert(g, l);
        }
        Ok(FactorEmbedding { ty, base: base.to_vec(), to_local, group, classes: engine.unipotent_classes(ty)? })
    }

    /// Image of `class` under the isomorphism onto `target` (a factor of the
    /// same type) sending `self.base[i]` to `labeled[i]`. Classes move along
    /// with their Springer characters; only type D has outer automorphisms
    /// that move classes.
    pub fn class_map(&self, labeled: &[usize], target: &FactorEmbedding) -> Result<Vec<usize>> {
        let identity = || (0..self.classes.len()).collect();
        if self.ty.family != Family::D {
            return Ok(identity());
        }
        let lrs = self.group.root_system();
        let images: Vec<usize> = labeled
            .iter()
            .map(|g| target.to_local.get(g).copied())
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Embedding("labelled base leaves the factor".into()))?;
        if images.iter().enumerate().all(|(i, &l)| l == lrs.simple(i)) {
            return Ok(identity());
        }
        let mut s: Perm = vec![0; lrs.num_roots()];
        for (r, c) in lrs.roots().iter().enumerate() {
            let mut v = vec![0i64; lrs.rank()];
            for (coef, &b) in c.iter().zip(&images) {
                for (x, y) in v.iter_mut().zip(lrs.root(b)) {
                    *x += coef * y;
                }
            }
            s[r] = lrs.index_of(&v).ok_or_else(|| Error::Embedding("labelled base is not a base".into()))? as u16;
        }
        let s_inv = invert(&s);
        let g = &self.group;
        let cl = g.classes();
        let conj: Vec<usize> = cl
            .representatives
            .iter()
            .map(|&x| g.index_of(&compose(&s_inv, &compose(&g.elements()[x], &s))).map(|e| cl.class_of[e]))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Embedding("automorphism does not normalize the Weyl group".into()))?;
        self.classes
            .iter()
            .map(|class| {
                let chi = g
                    .labels()
                    .iter()
                    .position(|l| *l == class.springer)
                    .ok_or_else(|| Error::Integrity("Springer label missing from the character table".into()))?;
                let moved: Vec<i64> = conj.iter().map(|&c| g.values()[chi][c]).collect();
                let psi = g
                    .values()
                    .iter()
                    .position(|v| *v == moved)
                    .ok_or_else(|| Error::Integrity("transported character is not irreducible".into()))?;
                target
                    .classes
                    .iter()
                    .position(|o| o.springer == g.labels()[psi])
                    .ok_or_else(|| Error::Integrity(format!("no class with Springer character {}", g.labels()[psi])))
            })
            .collect()
    }
}

/// For each factor, the factor it is moved to and the map on its classes.
pub(crate) type Symmetry = Vec<(usize, Vec<usize>)>;

/// A pseudo-Levi subsystem, up to `W`-conjugacy.
#[derive(Clone, Debug)]
pub struct PseudoLevi {
    pub label: String,
    pub cartan_type: CartanType,
    /// Simple roots, factor by factor, as ambient root indices.
    pub base: Vec<usize>,
    pub num_roots: usize,
    pub central_torus_rank: usize,
    pub is_levi: bool,
    /// Characteristics in which no semisimple element has this centralizer.
    pub excluded_primes: Vec<u32>,
    /// Number of Jordan classes per unipotent class (central translates).
    pub multiplicity: u64,
    pub(crate) roots: RootSet,
    pub(crate) subsystem: RootSubsystem,
    pub(crate) factors: Vec<FactorEmbedding>,
    pub(crate) weyl: WeylGroup,
    /// Class fusion of `weyl` into the Weyl group of the ambient group.
    pub(crate) fusion: Vec<usize>,
    /// Ambient root index → root index in `weyl`'s root system.
    pub(crate) to_sub: BTreeMap<usize, usize>,
    /// Distinct actions of the normalizer on class tuples: for each factor,
    /// the factor it moves to and the induced map on classes.
    pub(crate) symmetries: Vec<Symmetry>,
}

impl PseudoLevi {
    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn subsystem(&self) -> &RootSubsystem {
        &self.subsystem
    }

    /// Label of a tuple of unipotent classes, one per factor.
    pub fn class_label(&self, tuple: &[usize]) -> String {
        if tuple.is_empty() {
            return "1".into();
        }
        let parts: Vec<&str> = tuple.iter().zip(&self.factors).map(|(&c, f)| f.classes[c].label.as_str()).collect();
        parts.join(" x ")
    }

    fn class_dim(&self, tuple: &[usize]) -> u32 {
        tuple.iter().zip(&self.factors).map(|(&c, f)| f.classes[c].dim).sum()
    }

    /// Index in `weyl` of the Springer character of a class tuple.
    fn springer(&self, tuple: &[usize]) -> Result<usize> {
        let label = crate::weylgrp::CharLabel(
            tuple.iter().zip(&self.factors).map(|(&c, f)| f.classes[c].springer.clone()).collect(),
        );
        self.weyl.char_index(&label).ok_or_else(|| Error::Integrity(format!("{}: no character {label}", self.label)))
    }

    fn all_tuples(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for f in &self.factors {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..f.classes.len()).map(move |c| {
                        let mut t = t.clone();
                        t.push(c);
                        t
                    })
                })
                .collect();
        }
        out
    }
}

/// A Jordan class: pseudo-Levi and unipotent class tuple, with its orbit
/// dimension and its image `φ` in `Irr(W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanClass {
    pub levi: usize,
    pub classes: Vec<usize>,
    pub label: String,
    pub orbit_dim: u32,
    pub multiplicity: u64,
    /// Springer character of the class tuple, as an index into the
    /// pseudo-Levi's Weyl group.
    pub springer: usize,
    /// Index into the ambient Weyl group's characters.
    pub phi: usize,
}

/// Embeddings of one pseudo-Levi as a Levi subgroup of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviPair {
    pub sub: usize,
    pub sup: usize,
    /// Number of embeddings up to conjugacy by the larger Weyl group.
    pub embeddings: usize,
}

/// `to` lies in the regular closure of `from`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Degeneration {
    pub from: usize,
    pub to: usize,
    /// The induced class was very even and the member was chosen by its
    /// Springer character.
    pub ambiguous: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sheet {
    pub generator: usize,
    /// Jordan classes in the regular closure of the generator, including it.
    pub members: Vec<usize>,
    pub orbit_dim: u32,
    pub multiplicity: u64,
    pub ambiguous_pair: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub phi: usize,
    pub orbit_dim: u32,
    pub classes: Vec<usize>,
    pub sheets: Vec<usize>,
    /// Number of irreducible components, counting central translates.
    pub components: u64,
}

/// Outcome of one family of checks.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check { name: name.into(), passed: true, checked: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            if self.failures.len() < 20 {
                self.failures.push(failure());
            }
        }
    }
}

/// Everything computed for one group.
#[derive(Debug)]
pub struct Analysis {
    pub spec: GroupSpec,
    pub root_system: RootSystem,
    pub weyl: WeylGroup,
    pub pseudo_levis: Vec<PseudoLevi>,
    pub levi_pairs: Vec<LeviPair>,
    pub jordan_classes: Vec<JordanClass>,
    pub degenerations: Vec<Degeneration>,
    /// Reflexive-transitive regular closure of every Jordan class.
    pub closure: Vec<Vec<usize>>,
    pub sheets: Vec<Sheet>,
    pub strata: Vec<Stratum>,
    pub checks: Vec<Check>,
}

struct Embedding {
    sub: usize,
    sup: usize,
    /// Images of the simple roots of `sub`, factor by factor.
    images: Vec<Vec<usize>>,
    fusion: Vec<usize>,
}

impl Analysis {
    fn build(engine: &Engine, spec: &GroupSpec) -> Result<Self> {
        let caps = engine.caps();
        let rs = RootSystem::build(&spec.cartan_type, caps)?;
        if rs.num_roots() > 128 {
            return Err(Error::Config(format!("{} has more than 128 roots", spec.cartan_type)));
        }
        let weyl = engine.groups.weyl_group(&rs)?;
        for t in spec.cartan_type.factors() {
            engine.unipotent_classes(*t)?;
        }
        let perms = weyl.root_perms();
        let pseudo_levis = enumerate_pseudo_levis(engine, spec, &rs, &weyl, &perms)?;
        let mut checks = Vec::new();

        // Jordan classes
        let mut jordan = Vec::new();
        let mut jordan_index: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        for (li, l) in pseudo_levis.iter().enumerate() {
            for tuple in l.all_tuples() {
                if canonical_tuple(l, &tuple) != tuple {
                    continue;
                }
                let springer = l.springer(&tuple)?;
                let phi = repops::j_induce(&l.weyl, &weyl, &l.fusion, springer)?;
                jordan_index.insert((li, tuple.clone()), jordan.len());
                jordan.push(JordanClass {
                    levi: li,
                    label: format!("{} | {}", l.label, l.class_label(&tuple)),
                    orbit_dim: (rs.num_roots() - l.num_roots) as u32 + l.class_dim(&tuple),
                    multiplicity: l.multiplicity,
                    classes: tuple,
                    springer,
                    phi,
                });
            }
        }

        // Levi pairs, induction and the consistency checks along them
        let embeddings = levi_embeddings(&rs, &perms, &pseudo_levis)?;
        let mut levi_pairs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut degenerations = BTreeSet::new();
        let mut consistency = Check::new("induction-consistency");
        let mut transitivity = Check::new("j-transitivity");
        let mut dimension = Check::new("dimension-constancy");
        for e in &embeddings {
            *levi_pairs.entry((e.sub, e.sup)).or_default() += 1;
            let (l, lp) = (&pseudo_levis[e.sub], &pseudo_levis[e.sup]);
            for (ji, j) in jordan.iter().enumerate().filter(|(_, j)| j.levi == e.sub) {
                let induced = induce::induce_tuple(l, lp, &e.images, &j.classes)?;
                let jind = repops::j_induce(&l.weyl, &lp.weyl, &e.fusion, j.springer)?;
                let springers: Vec<usize> = induced.candidates.iter().map(|t| lp.springer(t)).collect::<Result<_>>()?;
                let chosen = springers.iter().position(|&s| s == jind);
                consistency.record(chosen.is_some(), || {
                    format!(
                        "{} -> {}: class {} induces to {} with Springer {}, j-induction gives {}",
                        l.label,
                        lp.label,
                        l.class_label(&j.classes),
                        lp.class_label(&induced.candidates[0]),
                        lp.weyl.labels()[springers[0]],
                        lp.weyl.labels()[jind]
                    )
                });
                let target_tuple = &induced.candidates[chosen.unwrap_or(0)];
                let target = jordan_index[&(e.sup, canonical_tuple(lp, target_tuple))];
                let t = &jordan[target];
                dimension.record(t.orbit_dim == j.orbit_dim, || {
                    format!(
                        "{} has orbit dimension {}, its degeneration {} has {}",
                        j.label, j.orbit_dim, t.label, t.orbit_dim
                    )
                });
                degenerations.insert(Degeneration { from: ji, to: target, ambiguous: induced.ambiguous });
                let via = repops::j_induce(&lp.weyl, &weyl, &lp.fusion, jind)?;
                transitivity.record(via == j.phi, || {
                    format!(
                        "{} <= {} <= G: j({}) = {}, through {} gives {}",
                        l.label,
                        lp.label,
                        l.weyl.labels()[j.springer],
                        weyl.labels()[j.phi],
                        lp.weyl.labels()[jind],
                        weyl.labels()[via]
                    )
                });
            }
            // transitivity for every character where all three inductions exist
            for chi in 0..l.weyl.values().len() {
                let (Ok(a), Ok(full)) = (
                    repops::j_induce(&l.weyl, &lp.weyl, &e.fusion, chi),
                    repops::j_induce(&l.weyl, &weyl, &l.fusion, chi),
                ) else {
                    continue;
                };
                if let Ok(b) = repops::j_induce(&lp.weyl, &weyl, &lp.fusion, a) {
                    transitivity.record(b == full, || {
                        format!("{} <= {} <= G: transitivity fails for {}", l.label, lp.label, l.weyl.labels()[chi])
                    });
                }
            }
        }
        let degenerations: Vec<Degeneration> = degenerations.into_iter().collect();

        // closure order
        let n = jordan.len();
        let mut closure: Vec<BTreeSet<usize>> = (0..n).map(|i| BTreeSet::from([i])).collect();
        for d in &degenerations {
            closure[d.from].insert(d.to);
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                let reach: Vec<usize> = closure[i].iter().flat_map(|&j| closure[j].iter().copied()).collect();
                for r in reach {
                    changed |= closure[i].insert(r);
                }
            }
            if !changed {
                break;
            }
        }
        let closure: Vec<Vec<usize>> = closure.into_iter().map(|s| s.into_iter().collect()).collect();

        // φ-constancy
        let mut constancy = Check::new("phi-constancy");
        for (i, c) in closure.iter().enumerate() {
            for &j in c {
                constancy.record(jordan[i].phi == jordan[j].phi, || {
                    format!(
                        "{} (phi {}) degenerates to {} (phi {})",
                        jordan[i].label,
                        weyl.labels()[jordan[i].phi],
                        jordan[j].label,
                        weyl.labels()[jordan[j].phi]
                    )
                });
            }
        }

        // sheets: maximal classes of each orbit dimension
        let ambiguous_edges: BTreeSet<(usize, usize)> =
            degenerations.iter().filter(|d| d.ambiguous).map(|d| (d.from, d.to)).collect();
        let mut sheets = Vec::new();
        for g in 0..n {
            let dominated = (0..n).any(|o| o != g && closure[o].contains(&g));
            if dominated {
                continue;
            }
            let members = closure[g].clone();
            let ambiguous_pair = ambiguous_edges.iter().any(|(a, b)| members.contains(a) && members.contains(b));
            sheets.push(Sheet {
                generator: g,
                orbit_dim: jordan[g].orbit_dim,
                multiplicity: jordan[g].multiplicity,
                members,
                ambiguous_pair,
            });
        }

        // strata
        let mut by_phi: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, j) in jordan.iter().enumerate() {
            by_phi.entry(j.phi).or_default().push(i);
        }
        let mut stratum_dims = Check::new("stratum-dimension");
        let mut unions = Check::new("strata-are-unions-of-sheets");
        let mut components = Check::new("components-are-sheets");
        let mut strata = Vec::new();
        for (phi, classes) in by_phi {
            let d = jordan[classes[0]].orbit_dim;
            for &c in &classes {
                stratum_dims.record(jordan[c].orbit_dim == d, || {
                    format!("stratum {} mixes orbit dimensions {d} and {}", weyl.labels()[phi], jordan[c].orbit_dim)
                });
            }
            let attached: Vec<usize> = (0..sheets.len()).filter(|&s| jordan[sheets[s].generator].phi == phi).collect();
            for &s in &attached {
                for &m in &sheets[s].members {
                    unions.record(jordan[m].phi == phi, || {
                        format!(
                            "sheet of {} straddles strata {} and {}",
                            jordan[sheets[s].generator].label,
                            weyl.labels()[phi],
                            weyl.labels()[jordan[m].phi]
                        )
                    });
                }
            }
            let covered: BTreeSet<usize> = attached.iter().flat_map(|&s| sheets[s].members.iter().copied()).collect();
            for &c in &classes {
                unions.record(covered.contains(&c), || format!("{} is in no sheet of its stratum", jordan[c].label));
            }
            // components: classes maximal inside the stratum
            let maximal: BTreeSet<usize> = classes
                .iter()
                .copied()
                .filter(|&c| !classes.iter().any(|&o| o != c && closure[o].contains(&c)))
                .collect();
            let generators: BTreeSet<usize> = attached.iter().map(|&s| sheets[s].generator).collect();
            components.record(maximal == generators, || {
                format!("stratum {}: maximal classes differ from sheet generators", weyl.labels()[phi])
            });
            strata.push(Stratum {
                phi,
                orbit_dim: d,
                components: attached.iter().map(|&s| sheets[s].multiplicity).sum(),
                classes,
                sheets: attached,
            });
        }

        checks.extend([constancy, unions, components, consistency, transitivity, dimension, stratum_dims]);
        let mut out = Analysis {
            spec: spec.clone(),
            root_system: rs,
            weyl,
            pseudo_levis,
            levi_pairs: levi_pairs
                .into_iter()
                .map(|((sub, sup), embeddings)| LeviPair { sub, sup, embeddings })
                .collect(),
            jordan_classes: jordan,
            degenerations,
            closure,
            sheets,
            strata,
            checks,
        };
        out.sort();
        Ok(out)
    }

    /// Puts Jordan classes, sheets and strata in canonical order: orbit
    /// dimension descending, then labels.
    fn sort(&mut self) {
        let n = self.jordan_classes.len();
        let mut order: Vec<usize> = (0..n).collect();
        let j = &self.jordan_classes;
        order.sort_by(|&a, &b| j[b].orbit_dim.cmp(&j[a].orbit_dim).then_with(|| j[a].label.cmp(&j[b].label)));
        let mut new_index = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let remap = |v: &mut Vec<usize>| {
            for x in v.iter_mut() {
                *x = new_index[*x];
            }
            v.sort_unstable();
        };
        self.jordan_classes = order.iter().map(|&o| self.jordan_classes[o].clone()).collect();
        let mut closure: Vec<Vec<usize>> = order.iter().map(|&o| self.closure[o].clone()).collect();
        closure.iter_mut().for_each(remap);
        self.closure = closure;
        for d in &mut self.degenerations {
            d.from = new_index[d.from];
            d.to = new_index[d.to];
        }
        self.degenerations.sort();
        for s in &mut self.sheets {
            s.generator = new_index[s.generator];
            remap(&mut s.members);
        }
        self.sheets.sort_by_key(|s| s.generator);
        let labels: Vec<String> = self.weyl.labels().iter().map(|l| l.to_string()).collect();
        for st in &mut self.strata {
            remap(&mut st.classes);
            st.sheets = Vec::new();
        }
        for (si, s) in self.sheets.iter().enumerate() {
            let phi = self.jordan_classes[s.generator].phi;
            if let Some(st) = self.strata.iter_mut().find(|st| st.phi == phi) {
                st.sheets.push(si);
            }
        }
        self.strata.sort_by(|a, b| b.orbit_dim.cmp(&a.orbit_dim).then_with(|| labels[a.phi].cmp(&labels[b.phi])));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn phi_label(&self, phi: usize) -> String {
        self.weyl.labels()[phi].to_string()
    }

    /// Number of Jordan classes, counting central translates.
    pub fn jordan_count(&self) -> u64 {
        self.jordan_classes.iter().map(|j| j.multiplicity).sum()
    }

    /// Number of sheets, counting central translates.
    pub fn sheet_count(&self) -> u64 {
        self.sheets.iter().map(|s| s.multiplicity).sum()
    }
}

/// Representative of the normalizer orbit of a class tuple: the least tuple
/// in the orbit.
fn canonical_tuple(l: &PseudoLevi, tuple: &[usize]) -> Vec<usize> {
    let mut best = tuple.to_vec();
    for sym in &l.symmetries {
        let mut img = vec![usize::MAX; tuple.len()];
        for (k, (target, map)) in sym.iter().enumerate() {
            img[*target] = map[tuple[k]];
        }
        if img < best {
            best = img;
        }
    }
    best
}

/// Action of each normalizing element of `W` on the factors and their classes.
fn normalizer_actions(perms: &[Perm], set: RootSet, factors: &[FactorEmbedding]) -> Result<Vec<Symmetry>> {
    let mut out = BTreeSet::new();
    for p in perms.iter().filter(|p| pseudo::image(p, set) == set) {
        let mut action = Vec::with_capacity(factors.len());
        for f in factors {
            let labeled: Vec<usize> = f.base.iter().map(|&b| p[b] as usize).collect();
            let target = factors
                .iter()
                .position(|g| g.to_local.contains_key(&labeled[0]))
                .ok_or_else(|| Error::Embedding("normalizer moves a factor outside the subsystem".into()))?;
            action.push((target, f.class_map(&labeled, &factors[target])?));
        }
        out.insert(action);
    }
    Ok(out.into_iter().collect())
}

fn enumerate_pseudo_levis(
    engine: &Engine,
    spec: &GroupSpec,
    rs: &RootSystem,
    weyl: &WeylGroup,
    perms: &[Perm],
) -> Result<Vec<PseudoLevi>> {
    let levis = pseudo::levi_forms(rs, perms);
    let mut out = Vec::new();
    let full: RootSet = pseudo::set_of(&(0..rs.num_roots()).collect::<Vec<_>>());
    for (set, base) in pseudo::dedup(rs, perms, pseudo::affine_subsets(rs)) {
        let excluded: Vec<u32> =
            pseudo::torsion_primes(rs, &base).into_iter().filter(|&p| !pseudo::realizable(rs, &base, set, p)).collect();
        if !pseudo::realizable(rs, &base, set, 0) {
            return Err(Error::Integrity("an affine subsystem is not realizable in characteristic 0".into()));
        }
        if excluded.contains(&spec.characteristic) {
            continue;
        }
        let subsystem = classify_subsystem(rs, &base)?;
        let ct = subsystem.cartan_type().clone();
        let factors = ct
            .factors()
            .iter()
            .zip(subsystem.factor_bases())
            .map(|(&t, b)| FactorEmbedding::new(engine, rs, t, b))
            .collect::<Result<Vec<_>>>()?;
        let sub_rs = RootSystem::build(&ct, engine.caps())?;
        let sub_weyl = engine.groups.weyl_group(&sub_rs)?;
        let mut to_sub = BTreeMap::new();
        for (k, f) in factors.iter().enumerate() {
            let off = sub_rs.factor_offsets()[k];
            for (&g, &l) in &f.to_local {
                let mut v = vec![0i64; sub_rs.rank()];
                let local = f.group.root_system().root(l);
                v[off..off + local.len()].copy_from_slice(local);
                to_sub.insert(g, sub_rs.index_of(&v).expect("factor root present"));
            }
        }
        let fusion = class_fusion(&sub_weyl, weyl, &subsystem.base())?;
        let symmetries = normalizer_actions(perms, set, &factors)?;
        let multiplicity = if set == full {
            let z: u64 = spec.cartan_type.factors().iter().map(|t| t.center_order()).product();
            pseudo::prime_to(z, spec.characteristic)
        } else {
            1
        };
        out.push(PseudoLevi {
            label: factor_label(rs, &subsystem),
            num_roots: ct.num_roots(),
            central_torus_rank: spec.total_rank - ct.rank(),
            is_levi: levis.contains(&set),
            excluded_primes: excluded,
            multiplicity,
            cartan_type: ct,
            base: subsystem.base(),
            roots: set,
            subsystem,
            factors,
            weyl: sub_weyl,
            fusion,
            to_sub,
            symmetries,
        });
    }
    // order: semisimple rank, then label; repeated labels get primes
    out.sort_by(|a, b| {
        a.cartan_type.rank().cmp(&b.cartan_type.rank()).then_with(|| a.label.cmp(&b.label)).then(a.roots.cmp(&b.roots))
    });
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for p in &out {
        *counts.entry(p.label.clone()).or_default() += 1;
    }
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for p in &mut out {
        if counts[&p.label] > 1 {
            let k = seen.entry(p.label.clone()).or_default();
            *k += 1;
            let primes = "'".repeat(*k - 1);
            p.label = format!("{}{primes}", p.label);
        }
    }
    Ok(out)
}

/// Type of a subsystem with short type A factors marked `~` when the
/// ambient factor has two root lengths.
fn factor_label(rs: &RootSystem, sub: &RootSubsystem) -> String {
    if sub.cartan_type().is_torus() {
        return "T".into();
    }
    let parts: Vec<String> = sub
        .cartan_type()
        .factors()
        .iter()
        .zip(sub.factor_bases())
        .map(|(t, b)| {
            let amb = rs.factor_of_root(b[0]);
            let long = rs.highest_roots()[amb];
            let short = t.family == Family::A && rs.norm(b[0]) < rs.norm(long);
            format!("{}{t}", if short { "~" } else { "" })
        })
        .collect();
    let mut parts = parts;
    parts.sort();
    parts.join("x")
}

/// All embeddings `w(L) ⊆ L'` with `L' ∩ span(w(L)) = w(L)`, up to
/// conjugacy by `W(L')`.
fn levi_embeddings(rs: &RootSystem, perms: &[Perm], pls: &[PseudoLevi]) -> Result<Vec<Embedding>> {
    let mut out = Vec::new();
    for (si, l) in pls.iter().enumerate() {
        for (ti, lp) in pls.iter().enumerate() {
            if l.num_roots > lp.num_roots || l.cartan_type.rank() > lp.cartan_type.rank() {
                continue;
            }
            let gens: Vec<Perm> = lp.base.iter().map(|&b| rs.reflection_perm(b)).collect();
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            for p in perms {
                let labeled: Vec<usize> = l.base.iter().map(|&b| p[b] as usize).collect();
                if labeled.iter().any(|&r| lp.roots >> r & 1 == 0) || seen.contains(&labeled) {
                    continue;
                }
                // orbit under W(L')
                let mut orbit = vec![labeled.clone()];
                seen.insert(labeled.clone());
                let mut head = 0;
                while head < orbit.len() {
                    for g in &gens {
                        let next: Vec<usize> = orbit[head].iter().map(|&r| g[r] as usize).collect();
                        if seen.insert(next.clone()) {
                            orbit.push(next);
                        }
                    }
                    head += 1;
                }
                if !is_levi_in(rs, lp.roots, &labeled) {
                    continue;
                }
                let mut images = Vec::new();
                let mut off = 0;
                for f in &l.factors {
                    images.push(labeled[off..off + f.base.len()].to_vec());
                    off += f.base.len();
                }
                let sub_images: Vec<usize> = labeled.iter().map(|r| lp.to_sub[r]).collect();
                let fusion = class_fusion(&l.weyl, &lp.weyl, &sub_images)?;
                out.push(Embedding { sub: si, sup: ti, images, fusion });
            }
        }
    }
    Ok(out)
}

/// Whether the subsystem with simple system `base` is cut out of `sup` by
/// its own span.
fn is_levi_in(rs: &RootSystem, sup: RootSet, base: &[usize]) -> bool {
    let span = pseudo::closure(rs, base);
    let vecs: Vec<Vec<i64>> = base.iter().map(|&b| rs.root(b).to_vec()).collect();
    pseudo::members(sup & !span).into_iter().all(|r| {
        let mut v = vecs.clone();
        v.push(rs.root(r).to_vec());
        linalg::rank(&v) > base.len()
    })
}
