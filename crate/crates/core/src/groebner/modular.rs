//! Gröbner bases over a prime field, used only for one-sided dimension bounds.
//!
//! Reducing integer generators mod p can only lower the rank of each graded
//! piece, so `dim S/I` over F_p is an upper bound for the dimension over Q.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::krull_dimension_of_monomials;
use crate::poly::{Monomial, Polynomial, Ring};

pub(crate) const PRIME: u64 = 2_147_483_647;

type Poly = Vec<(Monomial, u64)>;

fn mod_p(v: &BigInt) -> u64 {
    let r = (v % BigInt::from(PRIME)).to_i64().expect("residue fits");
    r.rem_euclid(PRIME as i64) as u64
}

fn inv(a: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % PRIME, PRIME - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    r
}

/// The image of the primitive integer multiple of `f`.
fn reduce(f: &Polynomial) -> Poly {
    let g = f.primitive_part();
    let mut out: Poly = g
        .terms()
        .iter()
        .map(|(m, c)| (m.clone(), mod_p(&c.numer())))
        .filter(|(_, c)| *c != 0)
        .collect();
    monic(&mut out);
    out
}

fn monic(f: &mut Poly) {
    if let Some(&(_, lc)) = f.first() {
        let i = inv(lc);
        for t in f.iter_mut() {
            t.1 = t.1 * i % PRIME;
        }
    }
}

/// `f − c·m·g` for descending term lists.
fn sub_mul(ring: &Ring, f: &Poly, c: u64, m: &Monomial, g: &Poly) -> Poly {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let neg = |x: u64| (PRIME - c * x % PRIME) % PRIME;
    while i < f.len() || j < g.len() {
        let gm = g.get(j).map(|t| t.0.mul(m));
        let ord = match (&f.get(i), &gm) {
            (Some(a), Some(b)) => ring.cmp_monomials(&a.0, b),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.expect("term"), neg(g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = (f[i].1 + neg(g[j].1)) % PRIME;
                if v != 0 {
                    out.push((f[i].0.clone(), v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn top_reduce(ring: &Ring, basis: &[Poly], masks: &[u64], mut f: Poly) -> Poly {
    while let Some((lt, lc)) = f.first().cloned() {
        let mask = lt.support_mask();
        let Some(k) = (0..basis.len()).find(|&k| masks[k] & !mask == 0 && basis[k][0].0.divides(&lt)) else {
            break;
        };
        let q = basis[k][0].0.quotient_of(&lt);
        f = sub_mul(ring, &f, lc, &q, &basis[k]);
    }
    f
}

/// Leading monomials of a Gröbner basis over F_p of the ideal generated by
/// the reductions of `gens`. Generators must be homogeneous.
pub(crate) fn leading_monomials_mod_p(ring: &Ring, gens: &[Polynomial]) -> Vec<Monomial> {
    let weights = ring.weights().to_vec();
    let mut basis: Vec<Poly> = Vec::new();
    let mut masks: Vec<u64> = Vec::new();
    let mut queue: BTreeMap<u32, Vec<Task>> = BTreeMap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for f in gens {
        let r = reduce(f);
        if let Some(d) = r.first().map(|t| t.0.weighted_degree()) {
            queue.entry(d).or_default().push(Task::Input(r));
        }
    }
    while let Some((_, tasks)) = queue.pop_first() {
        for task in tasks {
            let h = match task {
                Task::Input(f) => top_reduce(ring, &basis, &masks, f),
                Task::Pair(i, j) => {
                    pending.remove(&(i, j));
                    let lcm = basis[i][0].0.lcm(&basis[j][0].0, &weights);
                    let lm = lcm.support_mask();
                    let chain = (0..basis.len()).any(|k| {
                        k != i
                            && k != j
                            && masks[k] & !lm == 0
                            && basis[k][0].0.divides(&lcm)
                            && !pending.contains(&(i.min(k), i.max(k)))
                            && !pending.contains(&(j.min(k), j.max(k)))
                    });
                    if chain {
                        continue;
                    }
                    let a = sub_mul(ring, &Vec::new(), PRIME - 1, &basis[i][0].0.quotient_of(&lcm), &basis[i]);
                    let s = sub_mul(ring, &a, 1, &basis[j][0].0.quotient_of(&lcm), &basis[j]);
                    top_reduce(ring, &basis, &masks, s)
                }
            };
            if h.is_empty() {
                continue;
            }
            let mut h = h;
            monic(&mut h);
            let new = basis.len();
            masks.push(h[0].0.support_mask());
            basis.push(h);
            for old in 0..new {
                let (a, b) = (&basis[old][0].0, &basis[new][0].0);
                if a.coprime(b) {
                    continue;
                }
                let d = a.lcm(b, &weights).weighted_degree();
                pending.insert((old, new));
                queue.entry(d).or_default().push(Task::Pair(old, new));
            }
        }
    }
    basis.into_iter().map(|f| f[0].0.clone()).collect()
}

enum Task {
    Input(Poly),
    Pair(usize, usize),
}

/// An upper bound for `dim S/(gens)` over Q; exact for all but finitely many primes.
pub(crate) fn dimension_upper_bound(ring: &Ring, gens: &[Polynomial]) -> i64 {
    krull_dimension_of_monomials(&leading_monomials_mod_p(ring, gens), ring.nvars())
}
