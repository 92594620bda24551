//! Pseudo-Levi subsystems: enumeration from the affine diagrams, conjugacy
//! classes and realizability in a given characteristic.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg;
use crate::rootsys::RootSystem;
use crate::weylgrp::Perm;

/// A set of roots of an ambient system with at most 128 roots.
pub type RootSet = u128;

pub fn set_of(roots: &[usize]) -> RootSet {
    roots.iter().fold(0, |s, &r| s | 1u128 << r)
}

pub fn members(set: RootSet) -> Vec<usize> {
    (0..128).filter(|&r| set >> r & 1 == 1).collect()
}

pub fn image(perm: &[u16], set: RootSet) -> RootSet {
    let mut out = 0u128;
    let mut s = set;
    while s != 0 {
        let r = s.trailing_zeros() as usize;
        out |= 1u128 << perm[r];
        s &= s - 1;
    }
    out
}

/// All roots of the subsystem with simple system `base`.
pub fn closure(rs: &RootSystem, base: &[usize]) -> RootSet {
    let mut set = set_of(base);
    let mut frontier: Vec<usize> = base.to_vec();
    while let Some(r) = frontier.pop() {
        for &b in base {
            let t = rs.reflect_root(b, r);
            if set >> t & 1 == 0 {
                set |= 1u128 << t;
                frontier.push(t);
            }
        }
    }
    set
}

/// Least image of `set` under the group.
pub fn canonical(perms: &[Perm], set: RootSet) -> RootSet {
    perms.iter().map(|p| image(p, set)).min().unwrap_or(set)
}

/// Simple systems of all subsystems generated by proper subsets of the
/// affine diagrams, one per factor choice, in a fixed order.
pub fn affine_subsets(rs: &RootSystem) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for d in rs.extended_diagrams() {
        let n = d.nodes.len();
        let mut next = Vec::new();
        for partial in &out {
            for mask in 0..(1u32 << n) - 1 {
                let mut b = partial.clone();
                b.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| d.nodes[i]));
                next.push(b);
            }
        }
        out = next;
    }
    out
}

/// Canonical forms of the standard Levi subsystems.
pub fn levi_forms(rs: &RootSystem, perms: &[Perm]) -> BTreeSet<RootSet> {
    let n = rs.rank();
    (0..1u32 << n)
        .map(|mask| {
            let base: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| rs.simple(i)).collect();
            canonical(perms, closure(rs, &base))
        })
        .collect()
}

/// Fundamental-weight coordinates `<β, α_j^∨>` of a root.
fn weight_coords(rs: &RootSystem, beta: usize) -> Vec<i64> {
    (0..rs.rank()).map(|j| rs.cartan_integer(rs.simple(j), beta)).collect()
}

/// Whether some element of the simply connected torus in characteristic `p`
/// has exactly `set` as its set of roots with value 1.
///
/// Such an element is a character of `P / ZΨ` with values in the roots of
/// unity of order prime to `p`; roots outside `Ψ` with infinite order in the
/// quotient can always be avoided, so only the torsion images matter.
pub fn realizable(rs: &RootSystem, base: &[usize], set: RootSet, p: u32) -> bool {
    let r = rs.rank();
    let cols: Vec<Vec<i64>> = base.iter().map(|&b| weight_coords(rs, b)).collect();
    let matrix: linalg::Matrix = (0..r).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let (u, d) = linalg::smith_left(&matrix);
    let mut torsion: Vec<Vec<i64>> = Vec::new();
    for beta in 0..rs.num_roots() {
        if set >> beta & 1 == 1 {
            continue;
        }
        let y = linalg::mat_vec(&u, &weight_coords(rs, beta));
        if y[d.len()..].iter().any(|&x| x != 0) {
            continue;
        }
        let t: Vec<i64> = y.iter().zip(&d).map(|(&x, &di)| x.rem_euclid(di)).collect();
        if t.iter().all(|&x| x == 0) {
            return false;
        }
        torsion.push(t);
    }
    if torsion.is_empty() {
        return true;
    }
    let l = d.iter().fold(1i64, |a, &b| a / linalg::gcd(a, b) * b);
    let total: i64 = d.iter().product();
    (0..total).any(|mut code| {
        let c: Vec<i64> = d
            .iter()
            .map(|&di| {
                let x = code % di;
                code /= di;
                x
            })
            .collect();
        let order =
            c.iter().zip(&d).map(|(&ci, &di)| di / linalg::gcd(ci, di)).fold(1i64, |a, b| a / linalg::gcd(a, b) * b);
        if p != 0 && order % p as i64 == 0 {
            return false;
        }
        torsion.iter().all(|t| {
            let v: i64 = t.iter().zip(&c).zip(&d).map(|((&ti, &ci), &di)| ti * ci * (l / di)).sum();
            v.rem_euclid(l) != 0
        })
    })
}

/// Primes dividing the torsion of `P / ZΨ`; realizability can only change
/// at these characteristics.
pub fn torsion_primes(rs: &RootSystem, base: &[usize]) -> Vec<u32> {
    let r = rs.rank();
    let cols: Vec<Vec<i64>> = base.iter().map(|&b| weight_coords(rs, b)).collect();
    let matrix: linalg::Matrix = (0..r).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let (_, d) = linalg::smith_left(&matrix);
    let mut primes = BTreeSet::new();
    for mut x in d {
        let mut q = 2;
        while x > 1 {
            if x % q == 0 {
                primes.insert(q as u32);
                x /= q;
            } else {
                q += 1;
            }
        }
    }
    primes.into_iter().collect()
}

pub fn prime_to(n: u64, p: u32) -> u64 {
    if p == 0 {
        return n;
    }
    let mut n = n;
    while n.is_multiple_of(p as u64) {
        n /= p as u64;
    }
    n
}

/// Simple system of a closed subsystem relative to the ambient positive
/// roots.
pub fn simple_system(rs: &RootSystem, set: RootSet) -> Vec<usize> {
    let pos: Vec<usize> = members(set).into_iter().filter(|&r| rs.is_positive(r)).collect();
    pos.iter()
        .copied()
        .filter(|&b| {
            !pos.iter().any(|&a| {
                let v: Vec<i64> = rs.root(b).iter().zip(rs.root(a)).map(|(x, y)| x - y).collect();
                rs.index_of(&v).is_some_and(|d| rs.is_positive(d) && set >> d & 1 == 1)
            })
        })
        .collect()
}

/// Conjugacy classes of the subsystems generated by `candidates`, each as
/// its least member and that member's simple system.
pub fn dedup(rs: &RootSystem, perms: &[Perm], candidates: Vec<Vec<usize>>) -> Vec<(RootSet, Vec<usize>)> {
    let mut checked = BTreeSet::new();
    let mut classes = BTreeSet::new();
    for base in candidates {
        let set = closure(rs, &base);
        if checked.insert(set) {
            classes.insert(canonical(perms, set));
        }
    }
    classes.into_iter().map(|c| (c, simple_system(rs, c))).collect()
}
