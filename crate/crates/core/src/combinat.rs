//! Partitions, bipartitions and Murnaghan–Nakayama rules.

use alloc::vec::Vec;

/// A partition, stored as a non-increasing list of positive parts.
pub type Partition = Vec<u32>;

pub fn size(p: &[u32]) -> u32 {
    p.iter().sum()
}

/// Sorts parts into non-increasing order and drops zeros.
pub fn normalize(mut p: Vec<u32>) -> Partition {
    p.retain(|&x| x > 0);
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All ordered pairs `(α, β)` with `|α| + |β| = n`.
pub fn bipartitions(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in partitions(k) {
            for b in partitions(n - k) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

pub fn transpose(p: &[u32]) -> Partition {
    let Some(&first) = p.first() else { return Vec::new() };
    (1..=first).map(|i| p.iter().filter(|&&x| x >= i).count() as u32).collect()
}

/// `n(λ) = Σ (i−1)·λ_i`.
pub fn n_of(p: &[u32]) -> u32 {
    p.iter().enumerate().map(|(i, &x)| i as u32 * x).sum()
}

/// Dominance order `λ ≤ μ` on partitions of the same size.
pub fn dominated_by(l: &[u32], m: &[u32]) -> bool {
    let len = l.len().max(m.len());
    let (mut sl, mut sm) = (0u32, 0u32);
    for i in 0..len {
        sl += l.get(i).copied().unwrap_or(0);
        sm += m.get(i).copied().unwrap_or(0);
        if sl > sm {
            return false;
        }
    }
    true
}

/// Coordinatewise sum of two partitions.
pub fn add(a: &[u32], b: &[u32]) -> Partition {
    let len = a.len().max(b.len());
    (0..len).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect()
}

pub fn multiplicity(p: &[u32], part: u32) -> usize {
    p.iter().filter(|&&x| x == part).count()
}

/// Removals of a `k`-rim hook from `p`, as `(remaining partition, leg length)`.
fn rim_hooks(p: &[u32], k: u32) -> Vec<(Partition, u32)> {
    // β-numbers: λ_i + (ℓ − i)
    let l = p.len() as i64;
    let beta: Vec<i64> = p.iter().enumerate().map(|(i, &x)| x as i64 + l - 1 - i as i64).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        let nb = b - k as i64;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let leg = beta.iter().filter(|&&x| x > nb && x < b).count() as u32;
        let mut newbeta = beta.clone();
        newbeta[idx] = nb;
        newbeta.sort_unstable_by(|a, b| b.cmp(a));
        let q: Vec<u32> = newbeta.iter().enumerate().map(|(i, &x)| (x - (l - 1 - i as i64)) as u32).collect();
        out.push((normalize(q), leg));
    }
    out
}

/// Character of the symmetric group labelled by `lambda` at an element of
/// cycle type `mu`; `(n)` is the trivial character.
pub fn sym_char(lambda: &[u32], mu: &[u32]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    rim_hooks(lambda, k).into_iter().map(|(q, leg)| if leg % 2 == 0 { 1 } else { -1 } * sym_char(&q, rest)).sum()
}

/// Character of the hyperoctahedral group labelled `(alpha; beta)` at an
/// element with positive cycles `pos` and negative cycles `neg`.
///
/// `((n); ∅)` is trivial and `(∅; (1^n))` is the sign character; the second
/// component carries the linear character that is `−1` on sign changes.
pub fn hyperoctahedral_char(alpha: &[u32], beta: &[u32], pos: &[u32], neg: &[u32]) -> i64 {
    let (k, negative, pos_rest, neg_rest) = if let Some((&k, r)) = neg.split_first() {
        (k, true, pos, r)
    } else if let Some((&k, r)) = pos.split_first() {
        (k, false, r, neg)
    } else {
        return i64::from(alpha.is_empty() && beta.is_empty());
    };
    let mut total = 0;
    for (q, leg) in rim_hooks(alpha, k) {
        let s = if leg % 2 == 0 { 1 } else { -1 };
        total += s * hyperoctahedral_char(&q, beta, pos_rest, neg_rest);
    }
    for (q, leg) in rim_hooks(beta, k) {
        let mut s = if leg % 2 == 0 { 1 } else { -1 };
        if negative {
            s = -s;
        }
        total += s * hyperoctahedral_char(alpha, &q, pos_rest, neg_rest);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(bipartitions(2).len(), 5);
        assert_eq!(bipartitions(3).len(), 10);
    }

    #[test]
    fn transpose_and_n() {
        assert_eq!(transpose(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(transpose(&[]), Vec::<u32>::new());
        assert_eq!(n_of(&[1, 1, 1]), 3);
        assert_eq!(n_of(&[2, 1]), 1);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominated_by(&[2, 1, 1], &[2, 2]));
        assert!(dominated_by(&[2, 2], &[2, 2]));
        assert!(!dominated_by(&[3, 1], &[2, 2]));
    }

    #[test]
    fn s3_character_table() {
        // classes: identity (1,1,1), transposition (2,1), 3-cycle (3)
        let classes = [vec![1, 1, 1], vec![2, 1], vec![3]];
        let row = |l: &[u32]| classes.iter().map(|m| sym_char(l, m)).collect::<Vec<_>>();
        assert_eq!(row(&[3]), vec![1, 1, 1]);
        assert_eq!(row(&[2, 1]), vec![2, 0, -1]);
        assert_eq!(row(&[1, 1, 1]), vec![1, -1, 1]);
    }

    #[test]
    fn b1_and_b2_linear_characters() {
        assert_eq!(hyperoctahedral_char(&[1], &[], &[], &[1]), 1);
        assert_eq!(hyperoctahedral_char(&[], &[1], &[], &[1]), -1);
        // reflection representation ((1);(1)) of B2 at a single sign change
        assert_eq!(hyperoctahedral_char(&[1], &[1], &[1], &[1]), 0);
        assert_eq!(hyperoctahedral_char(&[1], &[1], &[1, 1], &[]), 2);
        // sign character at a transposition
        assert_eq!(hyperoctahedral_char(&[], &[1, 1], &[2], &[]), -1);
    }
}
