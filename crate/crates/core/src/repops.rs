//! Operations on class functions of Weyl groups: induction, decomposition,
//! Molien series, b-invariants, fake degrees and truncated induction.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{self, Matrix};
use crate::weylgrp::WeylGroup;
use crate::{Error, Result};

/// Power series of `1 / det(1 − qM)` up to and including `q^degree`.
fn inverse_det_series(m: &Matrix, degree: usize) -> Vec<i64> {
    let n = m.len();
    let cp = linalg::char_poly(m);
    // det(1 − qM) = Σ c_k q^(n−k)
    let mut d = vec![0i64; n + 1];
    for (k, &c) in cp.iter().enumerate() {
        d[n - k] = c;
    }
    let mut inv = vec![0i64; degree + 1];
    inv[0] = 1;
    for i in 1..=degree {
        let s: i64 = (1..=n.min(i)).map(|k| d[k] * inv[i - k]).sum();
        inv[i] = -s;
    }
    inv
}

/// Molien series `(1/|W|) Σ |C|·χ(C) / det(1 − q·g_C)` of every character,
/// truncated after `q^degree`.
pub fn molien_series(
    order: u64,
    sizes: &[u64],
    matrices: &[Matrix],
    values: &[Vec<i64>],
    degree: usize,
) -> Result<Vec<Vec<i64>>> {
    let per_class: Vec<Vec<i64>> = matrices.iter().map(|m| inverse_det_series(m, degree)).collect();
    values
        .iter()
        .map(|row| {
            (0..=degree)
                .map(|i| {
                    let s: i128 = row
                        .iter()
                        .zip(sizes)
                        .zip(&per_class)
                        .map(|((&x, &c), ser)| x as i128 * c as i128 * ser[i] as i128)
                        .sum();
                    if s % order as i128 != 0 {
                        return Err(Error::Integrity(format!("Molien coefficient of q^{i} is not integral")));
                    }
                    Ok((s / order as i128) as i64)
                })
                .collect()
        })
        .collect()
}

pub fn first_nonzero(s: &[i64]) -> Option<u32> {
    s.iter().position(|&x| x != 0).map(|i| i as u32)
}

/// Multiplies a Molien series by `∏ (1 − q^d)`, keeping its length.
pub fn fake_degree(series: &[i64], degrees: &[u32]) -> Vec<i64> {
    let mut out = series.to_vec();
    for &d in degrees {
        let d = d as usize;
        for i in (d..out.len()).rev() {
            out[i] -= out[i - d];
        }
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `[d]_q = 1 + q + … + q^(d−1)`.
pub fn q_integer(d: u32) -> Vec<i64> {
    vec![1; d as usize]
}

/// Fake degrees of every character of `w`, as products over the factors.
pub fn fake_degrees(w: &WeylGroup) -> Vec<Vec<i64>> {
    let mut out = vec![vec![1i64]];
    for f in w.factors() {
        out = out.iter().flat_map(|p| f.fake_degrees().iter().map(move |q| poly_mul(p, q))).collect();
    }
    out
}

/// Induces a class function of `sub` to `parent` along `fusion`.
pub fn induce(sub: &WeylGroup, parent: &WeylGroup, fusion: &[usize], f: &[i64]) -> Result<Vec<i64>> {
    if fusion.len() != sub.num_classes() || f.len() != sub.num_classes() {
        return Err(Error::InvalidInput("class function does not match the subgroup".into()));
    }
    let mut acc = vec![0i128; parent.num_classes()];
    for (d, &c) in fusion.iter().enumerate() {
        acc[c] += sub.class_sizes()[d] as i128 * f[d] as i128;
    }
    let ho = sub.order() as i128;
    let go = parent.order() as i128;
    acc.iter()
        .zip(parent.class_sizes())
        .map(|(&a, &cs)| {
            let num = a * go;
            let den = ho * cs as i128;
            if num % den != 0 {
                return Err(Error::Integrity("induced class function is not integral".into()));
            }
            Ok((num / den) as i64)
        })
        .collect()
}

/// Restricts a class function of `parent` to `sub` along `fusion`.
pub fn restrict(fusion: &[usize], f: &[i64]) -> Vec<i64> {
    fusion.iter().map(|&c| f[c]).collect()
}

/// Multiplicity of every irreducible character in a class function.
pub fn decompose(w: &WeylGroup, f: &[i64]) -> Result<Vec<i64>> {
    w.values().iter().map(|row| w.inner_product(row, f)).collect()
}

/// Truncated induction: the unique constituent of `Ind χ` whose
/// b-invariant equals `b(χ)`.
pub fn j_induce(sub: &WeylGroup, parent: &WeylGroup, fusion: &[usize], chi: usize) -> Result<usize> {
    let ind = induce(sub, parent, fusion, &sub.values()[chi])?;
    let mult = decompose(parent, &ind)?;
    let b0 = sub.b_invariants()[chi];
    let mut found = None;
    for (i, &m) in mult.iter().enumerate() {
        if m == 0 {
            continue;
        }
        if m < 0 {
            return Err(Error::Integrity("induced character has a negative multiplicity".into()));
        }
        let b = parent.b_invariants()[i];
        if b < b0 {
            return Err(Error::Integrity(format!(
                "constituent {} of the induction of {} has b = {b} < {b0}",
                parent.labels()[i],
                sub.labels()[chi]
            )));
        }
        if b == b0 {
            if m != 1 || found.is_some() {
                return Err(Error::Integrity(format!(
                    "j-induction of {} is not defined: b = {b0} is not attained exactly once",
                    sub.labels()[chi]
                )));
            }
            found = Some(i);
        }
    }
    found.ok_or_else(|| Error::Integrity(format!("j-induction of {} is empty", sub.labels()[chi])))
}

/// Serialisable b-invariant table.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BInvariantTable {
    pub cartan_type: String,
    pub rows: Vec<BInvariantRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BInvariantRow {
    pub label: String,
    pub dim: i64,
    pub b: u32,
    pub fake_degree: Vec<i64>,
}

pub fn b_invariant_table(w: &WeylGroup) -> BInvariantTable {
    let fake = fake_degrees(w);
    BInvariantTable {
        cartan_type: w.root_system().cartan_type().to_string(),
        rows: w
            .labels()
            .iter()
            .zip(w.values())
            .zip(w.b_invariants())
            .zip(fake)
            .map(|(((l, v), &b), f)| BInvariantRow { label: l.to_string(), dim: v[0], b, fake_degree: f })
            .collect(),
    }
}
