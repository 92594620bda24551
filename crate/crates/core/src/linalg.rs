//! Small exact integer linear algebra used by the root-system and Weyl-group
//! code. Matrices are row-major `Vec<Vec<i64>>` and never larger than the
//! rank cap, so nothing here is tuned for speed.

use alloc::vec;
use alloc::vec::Vec;

pub type Matrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += x * b[l][j];
            }
        }
    }
    out
}

pub fn trace(a: &Matrix) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

/// Rank of a list of integer vectors, by fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for j in 0..ncols {
                    m[i][j] = m[i][j] * a - m[r][j] * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd128(g, x));
                if g > 1 {
                    for x in m[i].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Coefficients `c[0..=n]` of `det(x·I − A)`, lowest degree first.
///
/// Faddeev–LeVerrier; every division is exact for integer input.
pub fn char_poly(a: &Matrix) -> Vec<i64> {
    let n = a.len();
    let mut c = vec![0i64; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i64; n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = mat_mul(a, &m);
        for i in 0..n {
            next[i][i] += c[n - k + 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let t = trace(&am);
        debug_assert_eq!(t % k as i64, 0);
        c[n - k] = -t / k as i64;
    }
    c
}

/// Smith normal form of an `r × k` integer matrix `b`.
///
/// Returns `(u, d)` with `u` unimodular (`r × r`) and `d` the nonzero
/// invariant factors, such that `u · b · v` is diagonal with entries `d` for
/// some unimodular `v`. The quotient `Z^r / (column span of b)` is then
/// `⊕ Z/d_i ⊕ Z^(r − len d)` in the coordinates `y = u · x`.
pub fn smith_left(b: &Matrix) -> (Matrix, Vec<i64>) {
    let r = b.len();
    let k = b.first().map_or(0, |row| row.len());
    let mut a = b.clone();
    let mut u = identity(r);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < r.min(k) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..k {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            // clear column t below the pivot
            for i in t + 1..r {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    for j in 0..k {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..r {
                        u[i][j] -= q * u[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                    a.swap(t, i);
                    u.swap(t, i);
                }
            }
            // clear row t right of the pivot
            for j in t + 1..k {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            let mut fixed = true;
            'outer: for i in t + 1..r {
                for j in t + 1..k {
                    if a[i][j] % a[t][t] != 0 {
                        for jj in 0..k {
                            a[t][jj] += a[i][jj];
                        }
                        for jj in 0..r {
                            u[t][jj] += u[i][jj];
                        }
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a[t][t] < 0 {
            for j in 0..k {
                a[t][j] = -a[t][j];
            }
            for j in 0..r {
                u[t][j] = -u[t][j];
            }
        }
        diag.push(a[t][t]);
        t += 1;
    }
    (u, diag)
}

pub fn mat_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_rotation() {
        // order-3 rotation in the A2 root lattice
        let a = vec![vec![0, -1], vec![1, -1]];
        assert_eq!(char_poly(&a), vec![1, 1, 1]);
    }

    #[test]
    fn rank_detects_dependence() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![2, 0, 1], vec![0, 3, 1], vec![2, 3, 2]]), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn smith_of_long_roots_in_c2() {
        // columns 2·(e1−e2)+α2 ... in simple coordinates: α0 = -(2α1+α2), α2
        let b = vec![vec![-2, 0], vec![-1, 1]];
        let (u, d) = smith_left(&b);
        assert_eq!(d, vec![1, 2]);
        let prod = mat_mul(&u, &b);
        // every column of u·b lies in d1 Z ⊕ d2 Z
        for j in 0..2 {
            assert_eq!(prod[1][j] % 2, 0);
        }
    }
}
