//! Dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Q;

/// Row echelon form in place; returns pivot columns.
fn eliminate(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d = d.sub_mul(&f, s);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    eliminate(&mut m).len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "square matrix expected");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = eliminate(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of `{v : m·v = 0}` for a matrix with `cols` columns.
pub fn kernel(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = eliminate(&mut m);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&m[r][f];
            }
            v
        })
        .collect()
}

/// Primitive integer basis of `{v : m·v = 0}`, by fraction-free Gauss–Jordan
/// elimination; every intermediate entry is a minor, so divisions are exact.
pub fn integer_kernel(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m = rows.to_vec();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(i) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, i);
        let (head, tail) = m.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("row r exists");
        let p = pivot_row[c].clone();
        for row in head.iter_mut().chain(rest.iter_mut()) {
            let a = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = (&p * &*x - &a * y) / &prev;
            }
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    let det = prev;
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigInt::zero(); cols];
            v[f] = det.clone();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -&m[i][f];
            }
            let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            v.iter().map(|x| x / &g).collect()
        })
        .collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank over `F_p` for a prime `p < 2^32`, and the rows that attain it.
/// Entries must already be reduced.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> (usize, Vec<usize>) {
    let mut m: Vec<(usize, Vec<u64>)> = rows.iter().cloned().enumerate().collect();
    let cols = m.first().map_or(0, |r| r.1.len());
    let mut chosen = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..m.len()).find(|&i| m[i].1[c] != 0) else {
            continue;
        };
        m.swap(r, i);
        let inv = pow_mod(m[r].1[c], p - 2, p);
        let pivot: Vec<u64> = m[r].1.iter().map(|&x| x * inv % p).collect();
        for row in m.iter_mut().skip(r + 1) {
            let f = row.1[c];
            if f != 0 {
                for (x, &y) in row.1[c..].iter_mut().zip(&pivot[c..]) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        chosen.push(m[r].0);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    chosen.sort_unstable();
    (r, chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&v| Q::from_int(v)).collect()).collect()
    }

    #[test]
    fn rank_and_inverse() {
        assert_eq!(rank(&q(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]])), 2);
        assert_eq!(rank(&q(&[&[0, 0], &[0, 0]])), 0);
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, q(&[&[1, -1], &[-1, 2]]));
        assert!(inverse(&q(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn kernels() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Q = m[0].iter().zip(v).fold(Q::zero(), |a, (x, y)| &a + &(x * y));
            assert!(dot.is_zero());
        }
        assert_eq!(kernel(&[], 2).len(), 2);
    }

    #[test]
    fn integer_kernels() {
        let big = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
        };
        let m = big(&[&[2, 4, 1, 3], &[1, 3, 0, 1], &[3, 7, 1, 4]]);
        let k = integer_kernel(&m, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in &m {
                assert!(r.iter().zip(v).map(|(a, b)| a * b).sum::<BigInt>().is_zero());
            }
            assert!(v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).is_one());
        }
        // the rational kernel spans the same space
        let q: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|x| Q::from_int(x.try_into().unwrap())).collect()).collect();
        let mut both: Vec<Vec<Q>> = kernel(&q, 4);
        both.extend(k.iter().map(|v| v.iter().map(|x| Q::from_int(x.try_into().unwrap())).collect()));
        assert_eq!(rank(&both), 2);
    }

    #[test]
    fn modular_rank() {
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4], vec![0, 1]], 7), (2, vec![0, 2]));
        // singular only mod 5
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![3, 1]], 5).0, 1);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![3, 1]], 7).0, 2);
    }
}
