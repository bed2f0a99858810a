//! Minimal graded free resolutions, Betti numbers, projective dimension and depth.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{schreyer_frame, Ideal};
use crate::poly::{binomial, combination, FreeModule, FreeModuleElement, Module, Polynomial, Q};

/// Total and graded Betti numbers. `graded` lists `(homological degree, internal degree, count)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub total: Vec<usize>,
    pub graded: Vec<(usize, i64, usize)>,
}

impl BettiTable {
    fn from_modules(modules: &[Module]) -> Self {
        let mut graded = Vec::new();
        for (i, m) in modules.iter().enumerate() {
            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for &s in m.shifts() {
                *counts.entry(s).or_default() += 1;
            }
            graded.extend(counts.into_iter().map(|(d, c)| (i, d, c)));
        }
        BettiTable {
            total: modules.iter().map(|m| m.rank()).collect(),
            graded,
        }
    }

    /// Length of the resolution; −1 for the zero module.
    pub fn length(&self) -> i64 {
        self.total.len() as i64 - 1
    }

    /// `Σ (−1)^i b_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.total
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// A graded free resolution `0 → F_p → … → F_0 → M → 0` of a submodule `M` of
/// a free module. `maps[0]` lists the generators of `M`; `maps[i]` for `i ≥ 1`
/// lists the images in `F_{i−1}` of the basis of `F_i`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub ambient: Module,
    pub modules: Vec<Module>,
    pub maps: Vec<Vec<FreeModuleElement>>,
    pub minimal: bool,
}

impl Resolution {
    pub fn betti(&self) -> BettiTable {
        BettiTable::from_modules(&self.modules)
    }

    pub fn length(&self) -> i64 {
        self.modules.len() as i64 - 1
    }

    /// Checks that consecutive maps compose to zero and, for a minimal
    /// resolution, that no differential has a nonzero constant entry.
    pub fn verify(&self) -> Result<()> {
        for i in 1..self.maps.len() {
            let target = if i == 1 { &self.ambient } else { &self.modules[i - 2] };
            for (c, col) in self.maps[i].iter().enumerate() {
                let comp = combination(target, &col.dense(), &self.maps[i - 1]);
                if !comp.is_zero() {
                    return Err(Error::engine(format!("d{} ∘ d{} is nonzero on column {c}", i - 1, i)));
                }
                if self.minimal && col.components().any(|(_, p)| p.is_constant()) {
                    return Err(Error::engine(format!("differential d{i} has a unit entry")));
                }
            }
        }
        Ok(())
    }
}

/// Minimal graded free resolution of the submodule spanned by `gens`.
pub fn free_resolution(gens: &[FreeModuleElement]) -> Result<Resolution> {
    let ambient = gens
        .first()
        .map(|g| g.module().clone())
        .ok_or_else(|| Error::mismatch("cannot resolve an empty generator list without an ambient module"))?;
    free_resolution_in(&ambient, gens)
}

pub fn free_resolution_in(ambient: &Module, gens: &[FreeModuleElement]) -> Result<Resolution> {
    let nonzero: Vec<FreeModuleElement> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let nvars = ambient.ring().nvars();
    let frame = if nonzero.is_empty() {
        Vec::new()
    } else {
        schreyer_frame(ambient, &nonzero)?
    };
    if frame.len() > nvars + 1 {
        return Err(Error::engine(format!(
            "Schreyer frame of length {} exceeds the Hilbert syzygy bound {nvars}",
            frame.len() - 1
        )));
    }
    let mut shifts: Vec<Vec<i64>> = frame.iter().map(|l| l.source.shifts().to_vec()).collect();
    let mut mats: Vec<Vec<Vec<Polynomial>>> = frame.iter().map(|l| l.images.iter().map(|e| e.dense()).collect()).collect();
    prune(&mut mats, &mut shifts);
    let ring = ambient.ring();
    let mut modules: Vec<Module> = Vec::new();
    let mut maps = Vec::new();
    for (cols, sh) in mats.into_iter().zip(shifts) {
        if sh.is_empty() {
            break;
        }
        let target = modules.last().unwrap_or(ambient).clone();
        let images = cols
            .into_iter()
            .map(|c| FreeModuleElement::from_components(&target, c))
            .collect::<Result<Vec<_>>>()?;
        modules.push(FreeModule::new(ring, sh));
        maps.push(images);
    }
    let res = Resolution {
        ambient: ambient.clone(),
        modules,
        maps,
        minimal: true,
    };
    res.verify()?;
    if res.length() > nvars as i64 {
        return Err(Error::engine(format!(
            "resolution of length {} exceeds the Hilbert syzygy bound {nvars}",
            res.length()
        )));
    }
    Ok(res)
}

/// Splits off trivial summands `S(-d) → S(-d)` until no differential `d_i`,
/// `i ≥ 1`, has a nonzero constant entry. `mats[i][c]` is column `c` of `d_i`.
fn prune(mats: &mut [Vec<Vec<Polynomial>>], shifts: &mut [Vec<i64>]) {
    for i in 1..mats.len() {
        while let Some((c, r)) = unit_entry(&mats[i]) {
            let u = mats[i][c][r].terms()[0].1.clone();
            let pivot = mats[i][c].clone();
            for (k, col) in mats[i].iter_mut().enumerate() {
                if k == c || col[r].is_zero() {
                    continue;
                }
                let f = col[r].scale(&u.inv());
                for (x, p) in col.iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *x = &*x - &(&f * p);
                    }
                }
            }
            // the new basis e'_r = d(e_c)/u is a cycle, so F_{i−1} loses e_r
            mats[i].remove(c);
            for col in mats[i].iter_mut() {
                debug_assert!(col[r].is_zero());
                col.remove(r);
            }
            shifts[i].remove(c);
            mats[i - 1].remove(r);
            shifts[i - 1].remove(r);
            // in the new basis of F_i every cycle has no e_c coordinate, and
            // the remaining coordinates are unchanged
            if let Some(next) = mats.get_mut(i + 1) {
                for col in next.iter_mut() {
                    col.remove(c);
                }
            }
        }
    }
}

/// A nonzero constant entry, preferring the sparsest column.
fn unit_entry(cols: &[Vec<Polynomial>]) -> Option<(usize, usize)> {
    cols.iter()
        .enumerate()
        .filter_map(|(c, col)| {
            let r = col.iter().position(|p| !p.is_zero() && p.is_constant())?;
            Some((col.iter().filter(|p| !p.is_zero()).count(), c, r))
        })
        .min()
        .map(|(_, c, r)| (c, r))
}

/// Length of the minimal resolution of the submodule spanned by `gens`.
pub fn projective_dimension(gens: &[FreeModuleElement]) -> Result<i64> {
    Ok(free_resolution(gens)?.length())
}

/// Minimal resolution of the ideal `I` viewed as a module (not of `S/I`).
pub fn ideal_resolution(ideal: &Ideal) -> Result<Resolution> {
    let m = crate::poly::FreeModule::unshifted(ideal.ring(), 1);
    let gens: Vec<FreeModuleElement> = ideal
        .gens()
        .iter()
        .map(|g| FreeModuleElement::monomial_vector(&m, 0, g.clone()))
        .collect();
    free_resolution_in(&m, &gens)
}

/// `pdim S/I`. Fails with [`Error::UnitIdeal`] when `S/I = 0`.
pub fn quotient_projective_dimension(ideal: &Ideal) -> Result<i64> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(0);
    }
    Ok(ideal_resolution(ideal)?.length() + 1)
}

/// Depth and Cohen–Macaulay property of a graded quotient `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub depth: i64,
    pub dimension: i64,
    pub pdim: i64,
    pub cohen_macaulay: bool,
}

/// Depth from `depth = n − pdim(S/I)`; Cohen–Macaulay iff depth equals dimension.
pub fn depth_and_cm(ideal: &Ideal) -> Result<DepthReport> {
    let pdim = quotient_projective_dimension(ideal)?;
    let depth = ideal.ring().nvars() as i64 - pdim;
    let dimension = ideal.krull_dimension();
    Ok(DepthReport {
        depth,
        dimension,
        pdim,
        cohen_macaulay: depth == dimension,
    })
}

/// Depth of `S/I` as the length of a maximal regular sequence of random
/// linear forms, detected through Hilbert series: a linear form `l` is a
/// nonzerodivisor on `S/J` iff `HS(S/(J + l)) = (1 − t)·HS(S/J)`. Requires a
/// standard grading. A non-generic draw can only underestimate the depth.
pub fn depth_by_linear_forms(ideal: &Ideal, seed: u64) -> Result<i64> {
    let ring = ideal.ring();
    if !ring.is_standard_graded() {
        return Err(Error::InvalidRing("linear-form depth needs a standard grading".into()));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = ideal.clone();
    let mut depth = 0;
    for _ in 0..ring.nvars() {
        let terms = (0..ring.nvars()).map(|i| (ring.var_monomial(i), Q::from_int(rng.gen_range(-1000..=1000))));
        let l = Polynomial::from_terms(ring, terms);
        let next = current.sum(&Ideal::new(ring, vec![l])?)?;
        let before = current.hilbert_numerator();
        let after = next.hilbert_numerator();
        let mut expected = before.coeffs().to_vec();
        expected.push(0);
        for i in (1..expected.len()).rev() {
            expected[i] -= expected[i - 1];
        }
        while expected.last() == Some(&0) {
            expected.pop();
        }
        if after.coeffs() != expected.as_slice() {
            break;
        }
        depth += 1;
        current = next;
    }
    Ok(depth)
}

/// Betti numbers of the truncated Koszul complex resolving the ideal of a
/// length-`k` regular sequence of linear forms: `b_p = C(k, p+1)`.
pub fn koszul_betti(k: usize) -> BettiTable {
    let total: Vec<usize> = (0..k).map(|p| binomial(k, p + 1)).collect();
    let graded = total.iter().enumerate().map(|(p, &b)| (p, p as i64 + 1, b)).collect();
    BettiTable { total, graded }
}
