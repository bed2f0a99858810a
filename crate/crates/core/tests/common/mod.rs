//! Oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::BTreeMap;

use multilog::groebner::syzygy_module;
use multilog::linalg::rank;
use multilog::poly::{parse_all, FreeModuleElement, Module, Monomial, Polynomial, Q};

pub fn elements(m: &Module, rows: &[&[&str]]) -> Vec<FreeModuleElement> {
    rows.iter()
        .map(|row| FreeModuleElement::from_components(m, parse_all(row, m.ring()).unwrap()).unwrap())
        .collect()
}

// Plain division by leading terms, written against the polynomial API only.
fn lead(p: &Polynomial) -> (Monomial, Q) {
    let r = p.ring();
    p.terms()
        .iter()
        .max_by(|a, b| r.cmp_monomials(&a.0, &b.0))
        .cloned()
        .expect("nonzero")
}

pub fn remainder(mut f: Polynomial, basis: &[Polynomial]) -> Polynomial {
    let r = f.ring().clone();
    let mut rem = Polynomial::zero(&r);
    while !f.is_zero() {
        let (m, c) = lead(&f);
        match basis.iter().find(|g| lead(g).0.divides(&m)) {
            Some(g) => {
                let (gm, gc) = lead(g);
                let q = gm.quotient_of(&m);
                f = &f - &g.mul_monomial(&q, &(&c * &gc.inv()));
            }
            None => {
                let t = Polynomial::monomial(&r, m, c);
                rem = &rem + &t;
                f = &f - &t;
            }
        }
    }
    rem
}

pub fn buchberger_by_hand(basis: &[Polynomial]) -> bool {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            let ((fm, fc), (gm, gc)) = (lead(f), lead(g));
            let l = fm.lcm(&gm, f.ring().weights());
            let s = &f.mul_monomial(&fm.quotient_of(&l), &fc.inv()) - &g.mul_monomial(&gm.quotient_of(&l), &gc.inv());
            if !remainder(s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

// degree-d coordinates of a graded free module: (slot, monomial) pairs
fn graded_basis(m: &Module, d: i64) -> Vec<(usize, Monomial)> {
    let r = m.ring();
    let mut out = Vec::new();
    for (i, &s) in m.shifts().iter().enumerate() {
        if d - s >= 0 {
            out.extend(r.monomials_of_degree((d - s) as u32).into_iter().map(|mono| (i, mono)));
        }
    }
    out
}

fn coordinates(v: &FreeModuleElement, index: &BTreeMap<(usize, Vec<u16>), usize>) -> Vec<Q> {
    let mut out = vec![Q::zero(); index.len()];
    for (i, p) in v.components() {
        for (mono, c) in p.terms() {
            out[index[&(i, mono.exponents().to_vec())]] = c.clone();
        }
    }
    out
}

fn index_of(basis: &[(usize, Monomial)]) -> BTreeMap<(usize, Vec<u16>), usize> {
    basis.iter().enumerate().map(|(k, (i, m))| ((*i, m.exponents().to_vec()), k)).collect()
}

/// Kernel dimension of `⊕ S(−deg g_i) → F` in degree `d` against the span of
/// the computed syzygies in that degree.
pub fn check_syzygies(gens: &[FreeModuleElement], max_degree: i64) -> Result<(), String> {
    let (source, syz) = syzygy_module(gens).map_err(|e| e.to_string())?;
    let target = gens[0].module().clone();
    for s in &syz {
        let image = s.components().fold(FreeModuleElement::zero(&target), |acc, (i, p)| acc.add(&gens[i].scale(p)));
        if !image.is_zero() {
            return Err("not a syzygy".into());
        }
    }
    let r = source.ring().clone();
    for d in 0..=max_degree {
        let cols = graded_basis(&source, d);
        if cols.is_empty() {
            continue;
        }
        let rows_basis = graded_basis(&target, d);
        let ti = index_of(&rows_basis);
        let images: Vec<Vec<Q>> = cols
            .iter()
            .map(|(i, mono)| coordinates(&gens[*i].scale(&Polynomial::monomial(&r, mono.clone(), Q::one())), &ti))
            .collect();
        let kernel_dim = cols.len() - rank(&images);
        let si = index_of(&cols);
        let mut span = Vec::new();
        for s in &syz {
            let ds = s.degree().expect("homogeneous syzygy");
            if ds > d {
                continue;
            }
            for mono in r.monomials_of_degree((d - ds) as u32) {
                span.push(coordinates(&s.scale(&Polynomial::monomial(&r, mono, Q::one())), &si));
            }
        }
        if rank(&span) != kernel_dim {
            return Err(format!("degree {d}: {} syzygies found, kernel has dimension {kernel_dim}", rank(&span)));
        }
    }
    Ok(())
}
