//! Burnside's eigenvector method for rational character tables.
//!
//! The class multiplication coefficients `a_ijl` define commuting matrices
//! whose common eigenvectors are the central characters
//! `ω_χ(C_j) = |C_j|·χ(g_j)/χ(1)`. For a group with rational characters
//! these are integers bounded by `|C_j|`, so the eigenspaces can be split
//! over a large prime field by testing the few admissible integer
//! eigenvalues, and every value lifts back to `Z` without ambiguity.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

const P: u64 = 1_000_000_007;

fn mulm(a: u64, b: u64) -> u64 {
    a * b % P
}

fn powm(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a);
        }
        a = mulm(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    powm(a, P - 2)
}

fn to_mod(x: i64) -> u64 {
    x.rem_euclid(P as i64) as u64
}

fn lift(x: u64) -> i64 {
    if x > P / 2 {
        x as i64 - P as i64
    } else {
        x as i64
    }
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let iv = inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = mulm(*x, iv);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..ncols {
                    m[i][j] = (m[i][j] + P - mulm(f, m[r][j])) % P;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of the null space of `m` (acting on column vectors).
fn nullspace(m: &[Vec<u64>], n: usize) -> Vec<Vec<u64>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (P - a[row][f]) % P;
            }
            v
        })
        .collect()
}

fn char_poly_mod(a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut c = vec![0u64; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0u64; n]; n];
    let mul = |x: &[Vec<u64>], y: &[Vec<u64>]| -> Vec<Vec<u64>> {
        let mut out = vec![vec![0u64; n]; n];
        for i in 0..n {
            for l in 0..n {
                if x[i][l] == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i][j] = (out[i][j] + mulm(x[i][l], y[l][j])) % P;
                }
            }
        }
        out
    };
    for k in 1..=n {
        let mut next = mul(a, &m);
        for i in 0..n {
            next[i][i] = (next[i][i] + c[n - k + 1]) % P;
        }
        m = next;
        let am = mul(a, &m);
        let t = (0..n).fold(0u64, |s, i| (s + am[i][i]) % P);
        c[n - k] = mulm((P - t) % P, inv(k as u64));
    }
    c
}

fn eval(poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0u64, |acc, &c| (mulm(acc, x) + c) % P)
}

/// Irreducible characters of a finite group with rational character table.
///
/// `coeff(i, j, l)` must return the class multiplication coefficient
/// `#{x ∈ C_i : x⁻¹·g_l ∈ C_j}`; class 0 must be the identity. Rows of the
/// result are characters, columns follow the class order.
pub fn character_table(order: u64, sizes: &[u64], coeff: impl Fn(usize) -> Vec<Vec<u64>>) -> Result<Vec<Vec<i64>>> {
    let k = sizes.len();
    if k == 0 || sizes[0] != 1 {
        return Err(Error::Algorithm("class 0 must be the identity".into()));
    }
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        // a[j][l] for this i
        let a = coeff(i);
        let bound = sizes[i] as i64;
        let mut next = Vec::new();
        for mut basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let pivots = rref(&mut basis);
            let m = basis.len();
            // restricted matrix R[s][r] = (A b_r)[pivot_s]
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| (0..k).map(|j| (0..k).fold(0u64, |s, l| (s + mulm(a[j][l], b[l])) % P)).collect())
                .collect();
            let r: Vec<Vec<u64>> = (0..m).map(|s| (0..m).map(|c| images[c][pivots[s]]).collect()).collect();
            let poly = char_poly_mod(&r);
            let mut split = Vec::new();
            let mut found = 0;
            for lam in -bound..=bound {
                let lm = to_mod(lam);
                if eval(&poly, lm) != 0 {
                    continue;
                }
                let shifted: Vec<Vec<u64>> = (0..m)
                    .map(|s| (0..m).map(|c| if s == c { (r[s][c] + P - lm) % P } else { r[s][c] }).collect())
                    .collect();
                let ns = nullspace(&shifted, m);
                found += ns.len();
                split.push(
                    ns.iter()
                        .map(|coef| {
                            (0..k)
                                .map(|j| (0..m).fold(0u64, |s, t| (s + mulm(coef[t], basis[t][j])) % P))
                                .collect::<Vec<u64>>()
                        })
                        .collect::<Vec<_>>(),
                );
            }
            if found != m {
                return Err(Error::Algorithm(format!(
                    "class {i}: eigenvalues outside the integral range or not diagonalisable"
                )));
            }
            next.extend(split);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Algorithm("central characters did not separate".into()));
    }
    let lcm = sizes.iter().fold(1i128, |l, &s| {
        let s = s as i128;
        let (mut a, mut b) = (l, s);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        l / a * s
    });
    let mut table = Vec::new();
    for s in spaces {
        let v = &s[0];
        if v[0] == 0 {
            return Err(Error::Algorithm("central character vanishes at the identity".into()));
        }
        let iv = inv(v[0]);
        let omega: Vec<i64> = v.iter().map(|&x| lift(mulm(x, iv))).collect();
        let denom: i128 = omega.iter().zip(sizes).map(|(&w, &c)| (w as i128) * (w as i128) * (lcm / c as i128)).sum();
        let num = order as i128 * lcm;
        if denom <= 0 || num % denom != 0 {
            return Err(Error::Algorithm("degree is not integral".into()));
        }
        let d2 = num / denom;
        let d = isqrt(d2);
        if d * d != d2 {
            return Err(Error::Algorithm("degree squared is not a square".into()));
        }
        let mut row = Vec::with_capacity(k);
        for (&w, &c) in omega.iter().zip(sizes) {
            let x = w as i128 * d;
            if x % c as i128 != 0 {
                return Err(Error::Algorithm("non-integral character value after lifting".into()));
            }
            row.push((x / c as i128) as i64);
        }
        table.push(row);
    }
    Ok(table)
}

fn isqrt(n: i128) -> i128 {
    let mut x = 0i128;
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}
