//! Labeling of the basis `∂_E = ∧_{i∈E} ∂_{x_i}` of the k-th exterior power of
//! the module of vector fields. Subsets are ranked in colexicographic order
//! through the combinatorial number system.

use crate::error::{Error, Result};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Colex rank of the strictly increasing subset `e` of `{0, ..., n-1}` with `|e| = k`.
pub fn subset_index(e: &[usize], n: usize, k: usize) -> Result<usize> {
    if k > n {
        return Err(Error::InvalidSubset(format!("k = {k} exceeds n = {n}")));
    }
    if e.len() != k {
        return Err(Error::InvalidSubset(format!(
            "expected {k} elements, got {}",
            e.len()
        )));
    }
    if e.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSubset(format!("{e:?} is not strictly increasing")));
    }
    if let Some(&last) = e.last() {
        if last >= n {
            return Err(Error::InvalidSubset(format!("{last} is out of range for n = {n}")));
        }
    }
    Ok(e.iter().enumerate().map(|(j, &x)| binomial(x, j + 1)).sum())
}

/// Inverse of [`subset_index`].
pub fn subset_from_index(index: usize, n: usize, k: usize) -> Result<Vec<usize>> {
    let total = binomial(n, k);
    if k > n || index >= total {
        return Err(Error::IndexOutOfRange { index, bound: total });
    }
    let mut rest = index;
    let mut out = vec![0; k];
    let mut hi = n;
    for j in (0..k).rev() {
        // largest x < hi with C(x, j+1) <= rest
        let mut x = hi - 1;
        while binomial(x, j + 1) > rest {
            x -= 1;
        }
        out[j] = x;
        rest -= binomial(x, j + 1);
        hi = x;
    }
    Ok(out)
}

/// All k-subsets of `{0..n-1}` in colex order, so `subsets(n,k)[i]` has rank `i`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..binomial(n, k))
        .map(|i| subset_from_index(i, n, k).expect("rank in range"))
        .collect()
}

/// All k-subsets of `{0..n-1}` in lexicographic order.
pub fn lex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_examples() {
        assert_eq!(subset_index(&[0, 1], 4, 2).unwrap(), 0);
        assert_eq!(subset_index(&[2, 3], 4, 2).unwrap(), 5);
        assert_eq!(subset_from_index(0, 4, 2).unwrap(), vec![0, 1]);
        // brute-force colex: order by reversed sorted tuple
        let mut all = lex_subsets(4, 2);
        all.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        assert_eq!(all, subsets(4, 2));
        assert_eq!(all[5], vec![2, 3]);
    }

    #[test]
    fn errors() {
        assert!(subset_index(&[1, 0], 4, 2).is_err());
        assert!(subset_index(&[0, 4], 4, 2).is_err());
        assert!(subset_index(&[0], 4, 2).is_err());
        assert!(subset_index(&[0, 1, 2], 2, 3).is_err());
        assert!(subset_from_index(6, 4, 2).is_err());
    }

    #[test]
    fn bijection_up_to_eight() {
        for n in 1..=8 {
            for k in 0..=n {
                let total = binomial(n, k);
                for i in 0..total {
                    let e = subset_from_index(i, n, k).unwrap();
                    assert_eq!(subset_index(&e, n, k).unwrap(), i);
                }
                let mut brute = lex_subsets(n, k);
                brute.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
                assert_eq!(brute, subsets(n, k), "n={n} k={k}");
            }
        }
    }
}
