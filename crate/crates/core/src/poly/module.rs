use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A graded free module `⊕ S(-shift_i)`: basis slot `i` has degree `shifts[i]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeModule {
    ring: Ring,
    shifts: Vec<i64>,
}

pub type Module = Arc<FreeModule>;

impl FreeModule {
    pub fn new(ring: &Ring, shifts: Vec<i64>) -> Module {
        Arc::new(FreeModule {
            ring: ring.clone(),
            shifts,
        })
    }

    pub fn unshifted(ring: &Ring, rank: usize) -> Module {
        Self::new(ring, vec![0; rank])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn same_as(&self, other: &FreeModule) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

impl fmt::Debug for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}^{} shifts {:?}", self.ring, self.rank(), self.shifts)
    }
}

/// A sparse vector over the ring. Rank-1 elements stand in for polynomials
/// whenever ideals are treated as submodules.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeModuleElement {
    module: Module,
    comps: BTreeMap<usize, Polynomial>,
}

impl FreeModuleElement {
    pub fn zero(module: &Module) -> Self {
        FreeModuleElement {
            module: module.clone(),
            comps: BTreeMap::new(),
        }
    }

    pub fn basis(module: &Module, i: usize) -> Self {
        Self::monomial_vector(module, i, Polynomial::one(module.ring()))
    }

    pub fn monomial_vector(module: &Module, i: usize, p: Polynomial) -> Self {
        let mut e = Self::zero(module);
        e.set(i, p);
        e
    }

    pub fn from_components(module: &Module, comps: Vec<Polynomial>) -> Result<Self> {
        if comps.len() != module.rank() {
            return Err(Error::mismatch(format!(
                "{} components for a module of rank {}",
                comps.len(),
                module.rank()
            )));
        }
        let mut e = Self::zero(module);
        for (i, p) in comps.into_iter().enumerate() {
            e.set(i, p);
        }
        Ok(e)
    }

    /// A polynomial viewed in the rank-1 module with shift 0.
    pub fn from_polynomial(p: &Polynomial) -> Self {
        let module = FreeModule::unshifted(p.ring(), 1);
        Self::monomial_vector(&module, 0, p.clone())
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn ring(&self) -> &Ring {
        self.module.ring()
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    pub fn set(&mut self, i: usize, p: Polynomial) {
        assert!(i < self.rank(), "component {i} out of range {}", self.rank());
        if p.is_zero() {
            self.comps.remove(&i);
        } else {
            self.comps.insert(i, p);
        }
    }

    pub fn component(&self, i: usize) -> Polynomial {
        self.comps
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.ring()))
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.comps.iter().map(|(i, p)| (*i, p))
    }

    pub fn support_len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Common value of `deg(component_i) + shift_i`, when the element is homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut d = None;
        for (i, p) in &self.comps {
            if !p.is_homogeneous() {
                return None;
            }
            let di = p.degree().expect("nonzero") as i64 + self.module.shifts()[*i];
            match d {
                None => d = Some(di),
                Some(d0) if d0 != di => return None,
                _ => {}
            }
        }
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn check_same(&self, other: &Self) {
        assert!(
            self.module.same_as(&other.module),
            "module mismatch: {:?} vs {:?}",
            self.module,
            other.module
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (i, p) in &other.comps {
            let s = &out.component(*i) + p;
            out.set(*i, s);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (i, p) in &other.comps {
            let s = &out.component(*i) - p;
            out.set(*i, s);
        }
        out
    }

    pub fn scale(&self, p: &Polynomial) -> Self {
        let mut out = Self::zero(&self.module);
        if p.is_zero() {
            return out;
        }
        for (i, c) in &self.comps {
            out.set(*i, c * p);
        }
        out
    }

    /// Re-homes the element into `target`, moving slot `i` to `map[i]`, variables unchanged
    /// unless `var_map` is given.
    pub fn reindex(&self, target: &Module, map: &[usize], var_map: Option<&[usize]>) -> Self {
        let mut out = Self::zero(target);
        for (i, p) in &self.comps {
            let q = match var_map {
                Some(vm) => p.map_variables(target.ring(), vm),
                None => p.clone(),
            };
            let j = map[*i];
            let s = &out.component(j) + &q;
            out.set(j, s);
        }
        out
    }

    /// Same components, reinterpreted in a module of equal rank (e.g. other shifts).
    pub fn with_module(&self, target: &Module) -> Self {
        assert_eq!(target.rank(), self.rank());
        FreeModuleElement {
            module: target.clone(),
            comps: self.comps.clone(),
        }
    }

    pub fn dense(&self) -> Vec<Polynomial> {
        (0..self.rank()).map(|i| self.component(i)).collect()
    }
}

/// Sum of `coeffs[i] * elems[i]`.
pub fn combination(module: &Module, coeffs: &[Polynomial], elems: &[FreeModuleElement]) -> FreeModuleElement {
    let mut acc = FreeModuleElement::zero(module);
    for (c, e) in coeffs.iter().zip(elems) {
        if !c.is_zero() {
            acc = acc.add(&e.scale(c));
        }
    }
    acc
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dense().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
