//! The invariant suite run by `verify`, next to the theorem checks computed
//! with the decomposition itself.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Analysis, Check, Engine};
use crate::repops;
use crate::rootsys::SimpleType;
use crate::weylgrp::WeylGroup;
use crate::Result;

/// Row and column orthogonality and `Σ dim² = |W|`, in exact arithmetic.
pub fn table_check(w: &WeylGroup) -> Check {
    let ct = w.root_system().cartan_type();
    let mut check = Check::new(&format!("character-table {ct}"));
    let k = w.num_classes();
    let values = w.values();
    check.record(values.len() == k, || format!("{ct}: {} characters for {k} classes", values.len()));
    for i in 0..values.len() {
        for j in i..values.len() {
            let ip = w.inner_product(&values[i], &values[j]);
            check
                .record(ip == Ok((i == j) as i64), || format!("{ct}: <{}, {}> = {ip:?}", w.labels()[i], w.labels()[j]));
        }
    }
    let order = w.order() as i128;
    for a in 0..k {
        for c in a..k {
            let s: i128 = values.iter().map(|r| r[a] as i128 * r[c] as i128).sum();
            let expect = if a == c { order / w.class_sizes()[a] as i128 } else { 0 };
            check.record(s == expect, || format!("{ct}: columns {a}, {c} give {s}, expected {expect}"));
        }
    }
    let sq: i128 = values.iter().map(|r| r[0] as i128 * r[0] as i128).sum();
    check.record(sq == order, || format!("{ct}: sum of squared degrees {sq} != |W| = {order}"));
    check
}

/// `b(1) = 0`, `b(sign) = N`, additivity over factors and the Poincaré
/// identity `Σ χ(1) f_χ(q) = Π [d_i]_q`.
pub fn b_invariant_check(w: &WeylGroup) -> Check {
    let rs = w.root_system();
    let ct = rs.cartan_type();
    let mut check = Check::new(&format!("b-invariants {ct}"));
    let b = w.b_invariants();
    check.record(b[w.trivial()] == 0, || format!("{ct}: b(trivial) = {}", b[w.trivial()]));
    let n = rs.num_positive() as u32;
    check.record(b[w.sign()] == n, || format!("{ct}: b(sign) = {}, expected {n}", b[w.sign()]));
    for (chi, label) in w.labels().iter().enumerate() {
        let parts: Option<u32> = label
            .0
            .iter()
            .zip(w.factors())
            .map(|(l, f)| f.labels().iter().position(|x| x == l).map(|i| f.b_invariants()[i]))
            .sum();
        check.record(parts == Some(b[chi]), || format!("{ct}: b({label}) = {} is not the sum {parts:?}", b[chi]));
    }
    let fake = repops::fake_degrees(w);
    let mut lhs = vec![0i64; rs.num_positive() + 1];
    for (row, p) in w.values().iter().zip(&fake) {
        for (i, &c) in p.iter().enumerate() {
            if i >= lhs.len() {
                lhs.resize(i + 1, 0);
            }
            lhs[i] += row[0] * c;
        }
    }
    let mut rhs = vec![1i64];
    for t in ct.factors() {
        for d in t.degrees() {
            rhs = repops::poly_mul(&rhs, &repops::q_integer(d));
        }
    }
    check.record(lhs == rhs, || format!("{ct}: Poincaré identity fails: {lhs:?} != {rhs:?}"));
    check
}

/// b-identity `b(ρ_u) = (dim G − dim O − rank)/2` and injectivity of the
/// Springer map, for one simple type.
pub fn springer_check(engine: &Engine, ty: SimpleType) -> Result<Check> {
    let group = engine.groups().factor(ty)?;
    let classes = engine.unipotent_classes(ty)?;
    let mut check = Check::new(&format!("springer {ty}"));
    let dim_g = (ty.num_roots() + ty.rank) as u32;
    let mut seen = BTreeSet::new();
    for c in classes.iter() {
        let idx = group.labels().iter().position(|l| *l == c.springer);
        check.record(idx.is_some(), || format!("{ty} {}: {} is not a character", c.label, c.springer));
        let Some(idx) = idx else { continue };
        let expect = (dim_g - c.dim - ty.rank as u32) / 2;
        let b = group.b_invariants()[idx];
        check.record(b == expect, || format!("{ty} {}: b({}) = {b}, expected {expect}", c.label, c.springer));
        check.record(seen.insert(idx), || format!("{ty} {}: {} is used twice", c.label, c.springer));
    }
    Ok(check)
}

impl Analysis {
    /// Character tables and b-invariants of `W` and every `W_L`, and the
    /// Springer tables of every simple type involved, followed by the
    /// decomposition checks.
    pub fn invariant_suite(&self, engine: &Engine) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        let groups = core::iter::once(&self.weyl).chain(self.pseudo_levis.iter().map(|l| &l.weyl));
        for w in groups {
            if seen.insert(w.root_system().cartan_type().clone()) && !w.root_system().cartan_type().is_torus() {
                out.push(table_check(w));
                out.push(b_invariant_check(w));
            }
        }
        let types: BTreeSet<SimpleType> = seen.iter().flat_map(|ct| ct.factors().iter().copied()).collect();
        for ty in types {
            out.push(springer_check(engine, ty)?);
        }
        out.extend(self.checks.iter().cloned());
        Ok(out)
    }
}
