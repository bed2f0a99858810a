use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Global monomial orders supported by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Weighted degree, ties broken reverse-lexicographically.
    DegRevLex,
    /// Pure lexicographic; `x_0 > x_1 > ...`.
    Lex,
}

/// Exponent vector together with its weighted degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    deg: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, n),
            deg: 0,
        }
    }

    pub fn from_exponents(exps: &[u16], weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let deg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg,
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn weighted_degree(&self) -> u32 {
        self.deg
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            deg: self.deg + other.deg,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum();
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` set iff variable `i` (mod 64) occurs.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << (i % 64)))
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.deg.cmp(&b.deg).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}

/// Polynomial ring over the rationals with named, weighted variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

pub type Ring = Arc<PolyRing>;

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        let weights = vec![1; names.len()];
        Self::with_weights(names, &weights)
    }

    pub fn with_weights<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Ring> {
        Self::with_order(names, weights, MonomialOrder::DegRevLex)
    }

    pub fn with_order<S: AsRef<str>>(
        names: &[S],
        weights: &[u32],
        order: MonomialOrder,
    ) -> Result<Ring> {
        if names.is_empty() {
            return Err(Error::InvalidRing("at least one variable required".into()));
        }
        if names.len() != weights.len() {
            return Err(Error::InvalidRing(format!(
                "{} variables but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|&&w| w == 0) {
            return Err(Error::InvalidRing(format!("weight {w} is not positive")));
        }
        let mut seen = HashSet::new();
        for n in names {
            let n = n.as_ref();
            if !valid_identifier(n) {
                return Err(Error::InvalidRing(format!("`{n}` is not an identifier")));
            }
            if !seen.insert(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(PolyRing {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
            weights: weights.to_vec(),
            order,
        }))
    }

    /// Ring with variables `prefix0, prefix1, ...` (or `prefix1..` when `one_based`).
    pub fn indexed(prefix: &str, n: usize, one_based: bool) -> Result<Ring> {
        let off = usize::from(one_based);
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{}", i + off)).collect();
        Self::new(&names)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and weights, different order.
    pub fn with_monomial_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(PolyRing {
            names: self.names.clone(),
            weights: self.weights.clone(),
            order,
        })
    }

    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        Monomial::from_exponents(exps, &self.weights)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        let mut e = vec![0u16; self.nvars()];
        e[i] = 1;
        self.monomial(&e)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// All monomials of weighted degree `d`, in ascending order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u16; self.nvars()];
        self.enumerate(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| self.cmp_monomials(a, b));
        out
    }

    fn enumerate(&self, i: usize, rem: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == self.nvars() {
            if rem == 0 {
                out.push(self.monomial(exps));
            }
            return;
        }
        let w = self.weights[i];
        let mut e = 0u32;
        while e * w <= rem {
            exps[i] = e as u16;
            self.enumerate(i + 1, rem - e * w, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))?;
        if !self.is_standard_graded() {
            write!(f, " weights {:?}", self.weights)?;
        }
        if self.order == MonomialOrder::Lex {
            write!(f, " lex")?;
        }
        Ok(())
    }
}
