//! Combinatorial invariants of monomial ideals: Krull dimension and Hilbert series numerators.

use std::fmt;

use crate::poly::Monomial;

/// `dim S/I` for the monomial ideal generated by `lts` in `n` variables, as the
/// size of a maximal set of variables containing no generator's support.
/// Returns −1 when a generator is 1.
pub fn krull_dimension_of_monomials(lts: &[Monomial], n: usize) -> i64 {
    if lts.iter().any(|m| m.is_one()) {
        return -1;
    }
    let masks: Vec<u64> = minimal_masks(lts);
    if masks.is_empty() {
        return n as i64;
    }
    let mut best = 0usize;
    // Depth-first search over variable sets, largest first.
    fn rec(i: usize, n: usize, chosen: u64, size: usize, masks: &[u64], best: &mut usize) {
        if size + (n - i) <= *best {
            return;
        }
        if i == n {
            *best = size;
            return;
        }
        let with = chosen | (1u64 << i);
        if masks.iter().all(|&m| m & !with != 0) {
            rec(i + 1, n, with, size + 1, masks, best);
        }
        rec(i + 1, n, chosen, size, masks, best);
    }
    rec(0, n, 0, 0, &masks, &mut best);
    best as i64
}

fn minimal_masks(lts: &[Monomial]) -> Vec<u64> {
    let mut masks: Vec<u64> = lts.iter().map(|m| m.support_mask()).collect();
    masks.sort_by_key(|m| m.count_ones());
    masks.dedup();
    let mut out: Vec<u64> = Vec::new();
    for m in masks {
        if !out.iter().any(|&o| o & !m == 0) {
            out.push(m);
        }
    }
    out
}

/// Integer polynomial `Σ coeffs[i] t^i`, the numerator of a Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct HilbertNumerator {
    coeffs: Vec<i64>,
}

impl HilbertNumerator {
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertNumerator { coeffs }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_shifted(&mut self, other: &HilbertNumerator, shift: usize, sign: i64) {
        if self.coeffs.len() < other.coeffs.len() + shift {
            self.coeffs.resize(other.coeffs.len() + shift, 0);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] += sign * c;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = Self::from_coeffs(trimmed);
    }

    fn times_one_minus(&self, d: usize) -> HilbertNumerator {
        let mut out = self.clone();
        out.add_shifted(self, d, -1);
        out
    }

    /// Multiplicity of `t = 1` as a root.
    pub fn order_at_one(&self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut p = self.coeffs.clone();
        let mut order = 0;
        loop {
            if p.iter().sum::<i64>() != 0 {
                return order;
            }
            // divide by (1 - t): q_i = Σ_{j≤i} p_j
            let mut q = Vec::with_capacity(p.len() - 1);
            let mut acc = 0;
            for c in &p[..p.len() - 1] {
                acc += c;
                q.push(acc);
            }
            p = q;
            order += 1;
        }
    }

    /// Order of the pole at `t = 1` of `N(t) / Π(1 − t^{w_i})` with `nvars` factors,
    /// which equals the Krull dimension; −1 for the zero numerator.
    pub fn pole_order(&self, nvars: usize) -> i64 {
        if self.is_zero() {
            return -1;
        }
        nvars as i64 - self.order_at_one() as i64
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t) / Π(1 − t^{w_i})` of `S/I`, for the
/// monomial ideal generated by `gens`, graded by `weights`. Uses pivot splitting
/// `N(I) = N(I + p) + t^{deg p} N(I : p)`.
pub fn hilbert_numerator_of_monomials(gens: &[Monomial], weights: &[u32]) -> HilbertNumerator {
    let exps: Vec<Vec<u16>> = gens.iter().map(|m| m.exponents().to_vec()).collect();
    numerator(exps, weights)
}

fn wdeg(e: &[u16], weights: &[u32]) -> usize {
    e.iter().zip(weights).map(|(&a, &w)| a as usize * w as usize).sum()
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|e| e.iter().map(|&x| x as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::new();
    for g in gens {
        if !out.iter().any(|o| divides(o, &g)) {
            out.push(g);
        }
    }
    out
}

fn numerator(gens: Vec<Vec<u16>>, weights: &[u32]) -> HilbertNumerator {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return HilbertNumerator::one();
    }
    if gens.iter().any(|g| g.iter().all(|&a| a == 0)) {
        return HilbertNumerator::from_coeffs(Vec::new());
    }
    let n = weights.len();
    // pairwise coprime generators: product of (1 - t^deg)
    let mut seen = vec![false; n];
    let mut coprime = true;
    'outer: for g in &gens {
        for (i, &a) in g.iter().enumerate() {
            if a > 0 {
                if seen[i] {
                    coprime = false;
                    break 'outer;
                }
                seen[i] = true;
            }
        }
    }
    if coprime {
        let mut acc = HilbertNumerator::one();
        for g in &gens {
            acc = acc.times_one_minus(wdeg(g, weights));
        }
        return acc;
    }
    // pivot on the variable occurring in most non-pure-power generators
    let mut count = vec![0usize; n];
    for g in &gens {
        if g.iter().filter(|&&a| a > 0).count() > 1 {
            for (i, &a) in g.iter().enumerate() {
                if a > 0 {
                    count[i] += 1;
                }
            }
        }
    }
    let var = (0..n).max_by_key(|&i| (count[i], std::cmp::Reverse(i))).expect("n > 0");
    let e = gens
        .iter()
        .filter(|g| g[var] > 0)
        .map(|g| g[var])
        .min()
        .expect("variable occurs");
    let mut pivot = vec![0u16; n];
    pivot[var] = e;

    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[var] = h[var].saturating_sub(e);
            h
        })
        .collect();
    let mut out = numerator(plus, weights);
    out.add_shifted(&numerator(colon, weights), wdeg(&pivot, weights), 1);
    out
}
