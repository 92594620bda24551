//! Weyl groups as permutation groups on roots, their conjugacy classes and
//! labelled rational character tables.
//!
//! Irreducible factors are enumerated once and cached; a reducible Weyl group
//! is the direct product of its factors, with classes, characters and labels
//! formed factorwise.

mod burnside;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

pub use burnside::character_table as burnside_table;

use crate::combinat::{self, Partition};
use crate::linalg::Matrix;
use crate::rootsys::{CartanType, Family, RootSystem, SimpleType};
use crate::{repops, Caps, Error, Result};

/// A Weyl group element as the permutation it induces on the roots.
pub type Perm = Vec<u16>;

pub fn compose(a: &[u16], b: &[u16]) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn invert(a: &[u16]) -> Perm {
    let mut out = vec![0u16; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u16;
    }
    out
}

/// Label of an irreducible character of an irreducible Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrLabel {
    /// Type A: `(n)` is trivial, `(1^n)` the sign.
    Partition(Partition),
    /// Types B and C: `((n); ∅)` is trivial, `(∅; (1^n))` the sign.
    Bipartition(Partition, Partition),
    /// Type D: unordered pair written with the larger component first;
    /// equal components carry a `±` tag.
    Unordered(Partition, Partition, Option<bool>),
    /// `phi{dim}_{b}` names, primed on collisions.
    Named(String),
}

fn write_partition(f: &mut fmt::Formatter<'_>, p: &[u32]) -> fmt::Result {
    write!(f, "[")?;
    for (i, x) in p.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::Partition(p) => write_partition(f, p),
            IrrLabel::Bipartition(a, b) | IrrLabel::Unordered(a, b, None) => {
                write_partition(f, a)?;
                write!(f, ".")?;
                write_partition(f, b)
            }
            IrrLabel::Unordered(a, b, Some(plus)) => {
                write_partition(f, a)?;
                write!(f, ".")?;
                write_partition(f, b)?;
                write!(f, "{}", if *plus { "+" } else { "-" })
            }
            IrrLabel::Named(s) => write!(f, "{s}"),
        }
    }
}

/// Label of an irreducible character of a product of Weyl groups.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharLabel(pub Vec<IrrLabel>);

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    /// Least element index in each class; classes are sorted by it.
    pub representatives: Vec<usize>,
    pub class_of: Vec<usize>,
    pub sizes: Vec<u64>,
    pub members: Vec<Vec<usize>>,
}

/// The Weyl group of an irreducible root system together with its
/// character table and Molien data.
#[derive(Debug)]
pub struct FactorGroup {
    ty: SimpleType,
    rs: RootSystem,
    elements: Vec<Perm>,
    lookup: BTreeMap<Perm, usize>,
    words: Vec<Vec<u8>>,
    classes: ConjugacyClasses,
    /// `values[χ][class]`.
    values: Vec<Vec<i64>>,
    labels: Vec<IrrLabel>,
    b: Vec<u32>,
    fake_degrees: Vec<Vec<i64>>,
}

impl FactorGroup {
    pub fn new(ty: SimpleType, caps: &Caps) -> Result<Self> {
        let predicted = ty.weyl_order();
        if predicted > caps.order {
            return Err(Error::Resource { what: format!("Weyl group of {ty}"), predicted, cap: caps.order });
        }
        let rs = RootSystem::build_uncapped(&CartanType::simple(ty));
        let n = rs.rank();
        let gens: Vec<Perm> = (0..n).map(|i| rs.reflection_perm(rs.simple(i))).collect();
        let identity: Perm = (0..rs.num_roots() as u16).collect();
        let mut elements = vec![identity.clone()];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut lookup = BTreeMap::new();
        lookup.insert(identity, 0usize);
        let mut head = 0;
        while head < elements.len() {
            for (g, gen) in gens.iter().enumerate() {
                let next = compose(&elements[head], gen);
                if !lookup.contains_key(&next) {
                    lookup.insert(next.clone(), elements.len());
                    let mut w = words[head].clone();
                    w.push(g as u8);
                    words.push(w);
                    elements.push(next);
                }
            }
            head += 1;
        }
        if elements.len() as u64 != predicted {
            return Err(Error::Integrity(format!("W({ty}) has {} elements, expected {predicted}", elements.len())));
        }
        let classes = conjugacy_partition(&elements, &lookup, &gens);
        let mut group = FactorGroup {
            ty,
            rs,
            elements,
            lookup,
            words,
            classes,
            values: Vec::new(),
            labels: Vec::new(),
            b: Vec::new(),
            fake_degrees: Vec::new(),
        };
        group.fill_table()?;
        Ok(group)
    }

    fn fill_table(&mut self) -> Result<()> {
        let ty = self.ty;
        let reps = self.classes.representatives.clone();
        let (values, mut labels): (Vec<Vec<i64>>, Vec<Option<IrrLabel>>) = match ty.family {
            Family::A => {
                let cycle_types: Vec<Partition> = reps.iter().map(|&r| self.cycle_type(r)).collect();
                combinat::partitions(ty.rank as u32 + 1)
                    .into_iter()
                    .map(|l| {
                        let row = cycle_types.iter().map(|m| combinat::sym_char(&l, m)).collect();
                        (row, Some(IrrLabel::Partition(l)))
                    })
                    .unzip()
            }
            Family::B | Family::C => {
                let types: Vec<(Partition, Partition)> = reps.iter().map(|&r| self.signed_cycle_type(r)).collect();
                combinat::bipartitions(ty.rank as u32)
                    .into_iter()
                    .map(|(a, b)| {
                        let row = types.iter().map(|(p, q)| combinat::hyperoctahedral_char(&a, &b, p, q)).collect();
                        (row, Some(IrrLabel::Bipartition(a, b)))
                    })
                    .unzip()
            }
            Family::D => {
                let values = self.burnside()?;
                let labels = self.label_type_d(&values)?;
                (values, labels.into_iter().map(Some).collect())
            }
            Family::G => {
                let values = self.burnside()?;
                let k = values.len();
                (values, vec![None; k])
            }
        };
        let matrices: Vec<Matrix> = reps.iter().map(|&r| self.matrix(r)).collect();
        let series =
            repops::molien_series(ty.weyl_order(), &self.classes.sizes, &matrices, &values, self.rs.num_positive())?;
        let degrees = ty.degrees();
        let mut b = Vec::new();
        let mut fake = Vec::new();
        for s in &series {
            b.push(repops::first_nonzero(s).ok_or_else(|| {
                Error::Integrity(format!("W({ty}): character absent from S(V) up to the positive-root bound"))
            })?);
            fake.push(repops::fake_degree(s, &degrees));
        }
        if ty.family == Family::G {
            labels = name_by_dim_and_b(&values, &b).into_iter().map(Some).collect();
        }
        let mut rows: Vec<(u32, IrrLabel, Vec<i64>, Vec<i64>)> = labels
            .into_iter()
            .zip(values)
            .zip(b)
            .zip(fake)
            .map(|(((l, v), b), f)| (b, l.expect("every character labelled"), v, f))
            .collect();
        rows.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        self.b = rows.iter().map(|r| r.0).collect();
        self.labels = rows.iter().map(|r| r.1.clone()).collect();
        self.values = rows.iter().map(|r| r.2.clone()).collect();
        self.fake_degrees = rows.into_iter().map(|r| r.3).collect();
        Ok(())
    }

    /// Generic character table by Burnside's method.
    pub fn burnside(&self) -> Result<Vec<Vec<i64>>> {
        let cl = &self.classes;
        let k = cl.sizes.len();
        let inverses: Vec<Perm> = self.elements.iter().map(|e| invert(e)).collect();
        burnside::character_table(self.order(), &cl.sizes, |i| {
            let mut a = vec![vec![0u64; k]; k];
            for l in 0..k {
                let g = &self.elements[cl.representatives[l]];
                for &x in &cl.members[i] {
                    let y = compose(&inverses[x], g);
                    a[cl.class_of[self.lookup[&y]]][l] += 1;
                }
            }
            a
        })
    }

    fn label_type_d(&self, values: &[Vec<i64>]) -> Result<Vec<IrrLabel>> {
        let n = self.ty.rank as u32;
        let types: Vec<(Partition, Partition)> =
            self.classes.representatives.iter().map(|&r| self.signed_cycle_type(r)).collect();
        let mut labels: Vec<Option<IrrLabel>> = vec![None; values.len()];
        let mut degenerate: BTreeMap<Partition, Vec<usize>> = BTreeMap::new();
        for (a, b) in combinat::bipartitions(n) {
            if a < b {
                continue;
            }
            let restricted: Vec<i64> =
                types.iter().map(|(p, q)| combinat::hyperoctahedral_char(&a, &b, p, q)).collect();
            for (idx, row) in values.iter().enumerate() {
                let ip: i64 =
                    row.iter().zip(&restricted).zip(&self.classes.sizes).map(|((x, y), &s)| x * y * s as i64).sum();
                if ip == 0 {
                    continue;
                }
                if a == b {
                    degenerate.entry(a.clone()).or_default().push(idx);
                } else {
                    labels[idx] = Some(IrrLabel::Unordered(a.clone(), b.clone(), None));
                }
            }
        }
        for (a, mut idxs) in degenerate {
            if idxs.len() != 2 {
                return Err(Error::Algorithm(format!("degenerate D label {a:?} does not split in two")));
            }
            idxs.sort_by(|&x, &y| values[y].cmp(&values[x]));
            labels[idxs[0]] = Some(IrrLabel::Unordered(a.clone(), a.clone(), Some(true)));
            labels[idxs[1]] = Some(IrrLabel::Unordered(a.clone(), a, Some(false)));
        }
        labels.into_iter().map(|l| l.ok_or_else(|| Error::Algorithm("unlabelled character of type D".into()))).collect()
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &[u16]) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn word(&self, e: usize) -> &[u8] {
        &self.words[e]
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn labels(&self) -> &[IrrLabel] {
        &self.labels
    }

    pub fn b_invariants(&self) -> &[u32] {
        &self.b
    }

    pub fn fake_degrees(&self) -> &[Vec<i64>] {
        &self.fake_degrees
    }

    /// Matrix of element `e` on the simple-root basis: column `j` is the
    /// image of `α_j`.
    pub fn matrix(&self, e: usize) -> Matrix {
        let n = self.rs.rank();
        let p = &self.elements[e];
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            let img = self.rs.root(p[self.rs.simple(j)] as usize);
            for i in 0..n {
                m[i][j] = img[i];
            }
        }
        m
    }

    /// Cycle type of the permutation of `ε`-coordinates (type A).
    fn cycle_type(&self, e: usize) -> Partition {
        let eps = self.rs.eps_coords().expect("type A has ε coordinates");
        let dim = self.ty.eps_dim();
        let p = &self.elements[e];
        let mut sigma = vec![0usize; dim];
        for (i, s) in sigma.iter_mut().enumerate() {
            let r = (0..eps.len()).find(|&r| eps[r][i] == 1).expect("e_i − e_j is a root");
            *s = eps[p[r] as usize].iter().position(|&x| x == 1).unwrap();
        }
        combinat::normalize(cycles(&sigma).into_iter().map(|c| c.len() as u32).collect())
    }

    /// Signed permutation of `ε`-coordinates (types B, C, D).
    pub(crate) fn signed_perm(&self, e: usize) -> Vec<(usize, i64)> {
        let eps = self.rs.eps_coords().expect("classical type");
        let n = self.ty.rank;
        let p = &self.elements[e];
        let find = |v: &[i64]| (0..eps.len()).find(|&r| eps[r] == v).expect("root present");
        (0..n)
            .map(|i| {
                let unit = |c: i64, j: Option<(usize, i64)>| {
                    let mut v = vec![0i64; n];
                    v[i] = c;
                    if let Some((j, s)) = j {
                        v[j] = s;
                    }
                    v
                };
                let (sources, scale): (Vec<usize>, i64) = match self.ty.family {
                    Family::B => (vec![find(&unit(1, None))], 1),
                    Family::C => (vec![find(&unit(2, None))], 2),
                    _ => {
                        let j = if i + 1 < n { i + 1 } else { i - 1 };
                        (vec![find(&unit(1, Some((j, 1)))), find(&unit(1, Some((j, -1))))], 2)
                    }
                };
                let mut img = vec![0i64; n];
                for r in sources {
                    for (x, y) in img.iter_mut().zip(&eps[p[r] as usize]) {
                        *x += y;
                    }
                }
                let k = img.iter().position(|&x| x != 0).unwrap();
                (k, img[k] / scale)
            })
            .collect()
    }

    fn signed_cycle_type(&self, e: usize) -> (Partition, Partition) {
        let sp = self.signed_perm(e);
        let sigma: Vec<usize> = sp.iter().map(|x| x.0).collect();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for c in cycles(&sigma) {
            let sign: i64 = c.iter().map(|&i| sp[i].1).product();
            if sign > 0 {
                pos.push(c.len() as u32);
            } else {
                neg.push(c.len() as u32);
            }
        }
        (combinat::normalize(pos), combinat::normalize(neg))
    }
}

fn cycles(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for s in 0..sigma.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            c.push(i);
            i = sigma[i];
        }
        out.push(c);
    }
    out
}

fn conjugacy_partition(elements: &[Perm], lookup: &BTreeMap<Perm, usize>, gens: &[Perm]) -> ConjugacyClasses {
    let n = elements.len();
    let mut class_id = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if class_id[s] != usize::MAX {
            continue;
        }
        let id = members.len();
        class_id[s] = id;
        let mut orbit = vec![s];
        let mut head = 0;
        while head < orbit.len() {
            let x = &elements[orbit[head]];
            for g in gens {
                let y = compose(&compose(g, x), g);
                let yi = lookup[&y];
                if class_id[yi] == usize::MAX {
                    class_id[yi] = id;
                    orbit.push(yi);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        members.push(orbit);
    }
    ConjugacyClasses {
        representatives: members.iter().map(|m| m[0]).collect(),
        class_of: class_id,
        sizes: members.iter().map(|m| m.len() as u64).collect(),
        members,
    }
}

/// `phi{dim}_{b}` names; characters sharing `(dim, b)` get primes in order
/// of their value vectors.
fn name_by_dim_and_b(values: &[Vec<i64>], b: &[u32]) -> Vec<IrrLabel> {
    let mut out = vec![IrrLabel::Named(String::new()); values.len()];
    let mut groups: BTreeMap<(i64, u32), Vec<usize>> = BTreeMap::new();
    for (i, row) in values.iter().enumerate() {
        groups.entry((row[0], b[i])).or_default().push(i);
    }
    for ((d, bb), mut idxs) in groups {
        idxs.sort_by(|&x, &y| values[x].cmp(&values[y]));
        let single = idxs.len() == 1;
        for (k, i) in idxs.into_iter().enumerate() {
            let primes = if single { String::new() } else { "'".repeat(k + 1) };
            out[i] = IrrLabel::Named(format!("phi{d}_{bb}{primes}"));
        }
    }
    out
}

/// Shared cache of irreducible Weyl groups.
#[derive(Debug)]
pub struct GroupCache {
    caps: Caps,
    map: RefCell<BTreeMap<SimpleType, Arc<FactorGroup>>>,
}

impl GroupCache {
    pub fn new(caps: Caps) -> Self {
        GroupCache { caps, map: RefCell::new(BTreeMap::new()) }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn factor(&self, ty: SimpleType) -> Result<Arc<FactorGroup>> {
        if let Some(g) = self.map.borrow().get(&ty) {
            return Ok(g.clone());
        }
        let g = Arc::new(FactorGroup::new(ty, &self.caps)?);
        self.map.borrow_mut().insert(ty, g.clone());
        Ok(g)
    }

    /// Enumerates the Weyl group of `rs`, subject to the order cap.
    pub fn weyl_group(&self, rs: &RootSystem) -> Result<WeylGroup> {
        let predicted = rs.cartan_type().weyl_order();
        if predicted > self.caps.order {
            return Err(Error::Resource {
                what: format!("Weyl group of {}", rs.cartan_type()),
                predicted,
                cap: self.caps.order,
            });
        }
        let factors = rs.cartan_type().factors().iter().map(|&t| self.factor(t)).collect::<Result<Vec<_>>>()?;
        WeylGroup::assemble(rs.clone(), factors)
    }
}

/// Weyl group of a possibly reducible root system: a direct product of
/// cached irreducible factors. Elements are tuples of factor element
/// indices; classes and characters are indexed in mixed radix with the
/// first factor most significant.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    factors: Vec<Arc<FactorGroup>>,
    /// Global root index → (factor, local root index).
    local: Vec<(usize, usize)>,
    /// Per factor, local root index → global root index.
    global: Vec<Vec<usize>>,
    sizes: Vec<u64>,
    values: Vec<Vec<i64>>,
    labels: Vec<CharLabel>,
    b: Vec<u32>,
}

impl WeylGroup {
    fn assemble(rs: RootSystem, factors: Vec<Arc<FactorGroup>>) -> Result<Self> {
        let mut local = vec![(0, 0); rs.num_roots()];
        let mut global = Vec::new();
        for (k, f) in factors.iter().enumerate() {
            let off = rs.factor_offsets()[k];
            let frs = f.root_system();
            let mut g = Vec::with_capacity(frs.num_roots());
            for (l, v) in frs.roots().iter().enumerate() {
                let mut w = vec![0i64; rs.rank()];
                w[off..off + v.len()].copy_from_slice(v);
                let gi = rs.index_of(&w).ok_or_else(|| Error::Integrity("factor root missing".into()))?;
                local[gi] = (k, l);
                g.push(gi);
            }
            global.push(g);
        }
        let mut sizes = vec![1u64];
        let mut values = vec![vec![1i64]];
        let mut labels = vec![CharLabel::default()];
        let mut b = vec![0u32];
        for f in &factors {
            let fs = &f.classes().sizes;
            sizes = sizes.iter().flat_map(|&s| fs.iter().map(move |&t| s * t)).collect();
            let mut nv = Vec::new();
            let mut nl = Vec::new();
            let mut nb = Vec::new();
            for (i, row) in values.iter().enumerate() {
                for (j, frow) in f.values().iter().enumerate() {
                    nv.push(row.iter().flat_map(|&x| frow.iter().map(move |&y| x * y)).collect());
                    let mut l = labels[i].clone();
                    l.0.push(f.labels()[j].clone());
                    nl.push(l);
                    nb.push(b[i] + f.b_invariants()[j]);
                }
            }
            values = nv;
            labels = nl;
            b = nb;
        }
        Ok(WeylGroup { rs, factors, local, global, sizes, values, labels, b })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn factors(&self) -> &[Arc<FactorGroup>] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|f| f.order()).product()
    }

    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// `values()[χ][class]`.
    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn labels(&self) -> &[CharLabel] {
        &self.labels
    }

    /// b-invariants, additive over factors.
    pub fn b_invariants(&self) -> &[u32] {
        &self.b
    }

    pub fn char_index(&self, label: &CharLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn char_index_str(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.to_string() == label)
    }

    /// Index of the trivial character.
    pub fn trivial(&self) -> usize {
        0
    }

    /// Index of the sign character.
    pub fn sign(&self) -> usize {
        let n = self.num_classes();
        (0..self.values.len())
            .find(|&i| (0..n).all(|c| self.values[i][c] == self.det_of_class(c)))
            .expect("sign character present")
    }

    fn det_of_class(&self, c: usize) -> i64 {
        // det of a Weyl group element is (−1)^(word length)
        self.class_factors(c)
            .iter()
            .zip(&self.factors)
            .map(|(&fc, f)| if f.word(f.classes().representatives[fc]).len() % 2 == 0 { 1 } else { -1 })
            .product()
    }

    /// Factor class indices of a product class.
    pub fn class_factors(&self, mut c: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for k in (0..self.factors.len()).rev() {
            let m = self.factors[k].classes().sizes.len();
            out[k] = c % m;
            c /= m;
        }
        out
    }

    pub fn class_from_factors(&self, fc: &[usize]) -> usize {
        fc.iter().zip(&self.factors).fold(0, |acc, (&c, f)| acc * f.classes().sizes.len() + c)
    }

    /// Class of a product element.
    pub fn class_of(&self, elem: &[usize]) -> usize {
        let fc: Vec<usize> = elem.iter().zip(&self.factors).map(|(&e, f)| f.classes().class_of[e]).collect();
        self.class_from_factors(&fc)
    }

    pub fn identity(&self) -> Vec<usize> {
        vec![0; self.factors.len()]
    }

    pub fn compose(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), f)| f.index_of(&compose(&f.elements()[x], &f.elements()[y])).unwrap())
            .collect()
    }

    /// Reflection in a root, as a product element.
    pub fn reflection(&self, root: usize) -> Vec<usize> {
        let (k, l) = self.local[root];
        let mut e = self.identity();
        let f = &self.factors[k];
        e[k] = f.index_of(&f.root_system().reflection_perm(l)).expect("reflections lie in W");
        e
    }

    /// Action of a product element on the global root indices.
    pub fn root_perm(&self, elem: &[usize]) -> Perm {
        (0..self.rs.num_roots())
            .map(|r| {
                let (k, l) = self.local[r];
                let f = &self.factors[k];
                self.global[k][f.elements()[elem[k]][l] as usize] as u16
            })
            .collect()
    }

    /// Every element, in mixed-radix order.
    pub fn elements(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for f in &self.factors {
            let n = f.order() as usize;
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..n).map(move |i| {
                        let mut v = e.clone();
                        v.push(i);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Every element as a permutation of the global roots.
    pub fn root_perms(&self) -> Vec<Perm> {
        self.elements().iter().map(|e| self.root_perm(e)).collect()
    }

    /// Representative of a class: factorwise least element.
    pub fn class_rep(&self, c: usize) -> Vec<usize> {
        self.class_factors(c).iter().zip(&self.factors).map(|(&fc, f)| f.classes().representatives[fc]).collect()
    }

    /// Matrix on the simple-root basis of the representative of class `c`.
    pub fn class_matrix(&self, c: usize) -> Matrix {
        let rep = self.class_rep(c);
        let n = self.rs.rank();
        let mut m = vec![vec![0i64; n]; n];
        for (k, f) in self.factors.iter().enumerate() {
            let off = self.rs.factor_offsets()[k];
            let fm = f.matrix(rep[k]);
            for i in 0..fm.len() {
                for j in 0..fm.len() {
                    m[off + i][off + j] = fm[i][j];
                }
            }
        }
        m
    }

    /// Exact class-weighted inner product `(1/|W|)·Σ |C|·f(C)·g(C)`.
    pub fn inner_product(&self, f: &[i64], g: &[i64]) -> Result<i64> {
        let s: i128 = f.iter().zip(g).zip(&self.sizes).map(|((&x, &y), &c)| x as i128 * y as i128 * c as i128).sum();
        let o = self.order() as i128;
        if s % o != 0 {
            return Err(Error::Integrity("inner product is not integral".into()));
        }
        Ok((s / o) as i64)
    }
}

/// Fusion of the classes of `sub` into the classes of `parent`, where the
/// `i`-th simple root of `sub` is sent to the parent root
/// `simple_images[i]`.
pub fn class_fusion(sub: &WeylGroup, parent: &WeylGroup, simple_images: &[usize]) -> Result<Vec<usize>> {
    let srs = sub.root_system();
    let prs = parent.root_system();
    if simple_images.len() != srs.rank() || simple_images.iter().any(|&r| r >= prs.num_roots()) {
        return Err(Error::Embedding("simple root images do not match the subgroup rank".into()));
    }
    let cm = srs.cartan_matrix();
    for i in 0..srs.rank() {
        for j in 0..srs.rank() {
            if prs.cartan_integer(simple_images[i], simple_images[j]) != cm[i][j] {
                return Err(Error::Embedding(format!(
                    "images of simple roots {i},{j} do not reproduce the Cartan matrix"
                )));
            }
        }
    }
    let reflections: Vec<Vec<usize>> = simple_images.iter().map(|&r| parent.reflection(r)).collect();
    let mut fusion = Vec::with_capacity(sub.num_classes());
    for c in 0..sub.num_classes() {
        let rep = sub.class_rep(c);
        let mut img = parent.identity();
        for (k, f) in sub.factors().iter().enumerate() {
            let off = srs.factor_offsets()[k];
            for &letter in f.word(rep[k]) {
                img = parent.compose(&img, &reflections[off + letter as usize]);
            }
        }
        fusion.push(parent.class_of(&img));
    }
    Ok(fusion)
}

/// Serialisable character table.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CharacterTableDump {
    pub cartan_type: String,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub labels: Vec<String>,
    pub dims: Vec<i64>,
    pub b: Vec<u32>,
    pub values: Vec<Vec<i64>>,
}

impl WeylGroup {
    pub fn dump(&self) -> CharacterTableDump {
        CharacterTableDump {
            cartan_type: self.rs.cartan_type().to_string(),
            order: self.order(),
            class_sizes: self.sizes.clone(),
            labels: self.labels.iter().map(|l| l.to_string()).collect(),
            dims: self.values.iter().map(|r| r[0]).collect(),
            b: self.b.clone(),
            values: self.values.clone(),
        }
    }
}
