//! Gröbner bases of submodules of graded free modules, and the kernel
//! computations built on them: syzygies, intersections, preimages.

mod dimension;
pub(crate) mod engine;
mod ideal;
mod modular;
mod schreyer;

use std::fmt;

pub use dimension::{hilbert_numerator_of_monomials, krull_dimension_of_monomials, HilbertNumerator};
pub use ideal::{hilbert_numerator, krull_dimension, Ideal};
pub(crate) use modular::{dimension_upper_bound, PRIME};
pub(crate) use schreyer::schreyer_frame;

use engine::{Ctx, Engine, Reducer, Vector};

use crate::error::{Error, Result};
use crate::poly::{FreeModule, FreeModuleElement, Module, Monomial};

/// A reduced Gröbner basis: monic, interreduced, sorted by ascending leading term.
#[derive(Clone)]
pub struct GroebnerBasis {
    module: Module,
    elements: Vec<FreeModuleElement>,
    ctx: Ctx,
    red: Reducer,
    // the same basis as primitive integer vectors, for reduction
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

fn common_module(gens: &[FreeModuleElement]) -> Result<Module> {
    let first = gens
        .first()
        .ok_or_else(|| Error::mismatch("empty generator list has no ambient module"))?;
    check_module(first.module(), gens)?;
    Ok(first.module().clone())
}

fn check_module(module: &Module, gens: &[FreeModuleElement]) -> Result<()> {
    for (i, g) in gens.iter().enumerate() {
        if !g.module().same_as(module) {
            return Err(Error::mismatch(format!(
                "generator #{i} lives in {:?}, expected {:?}",
                g.module(),
                module
            )));
        }
    }
    Ok(())
}

fn check_homogeneous(gens: &[FreeModuleElement], what: &str) -> Result<()> {
    match gens.iter().position(|g| !g.is_homogeneous()) {
        Some(i) => Err(Error::Inhomogeneous(format!("{what} #{i} is not homogeneous: {}", gens[i]))),
        None => Ok(()),
    }
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the submodule of `module` generated by `gens`.
    pub fn compute(module: &Module, gens: &[FreeModuleElement]) -> Result<Self> {
        check_module(module, gens)?;
        check_homogeneous(gens, "generator")?;
        Ok(Self::compute_unchecked(module, gens))
    }

    /// As [`GroebnerBasis::compute`] without the homogeneity requirement.
    /// Intended for elimination with a lexicographic order.
    pub fn compute_unchecked(module: &Module, gens: &[FreeModuleElement]) -> Self {
        let mut eng = Engine::new(module, None);
        for g in gens {
            eng.add_input(eng.ctx().to_vector(g), Vec::new());
        }
        eng.run(None);
        Self::from_vectors(module, eng.reduced_basis())
    }

    fn from_vectors(module: &Module, vs: Vec<Vector>) -> Self {
        let ctx = Ctx::new(module);
        let elements = vs.iter().map(|v| ctx.to_element(v, module)).collect();
        GroebnerBasis {
            module: module.clone(),
            elements,
            red: Reducer::from_vectors(vs),
            ctx,
        }
    }

    /// Wraps elements already known to form a Gröbner basis, skipping completion.
    pub(crate) fn from_known_basis(module: &Module, elems: &[FreeModuleElement]) -> Self {
        let ctx = Ctx::new(module);
        let vs = elems
            .iter()
            .filter(|e| !e.is_zero())
            .map(|e| {
                let mut v = ctx.to_vector(e);
                let lc = v.last().expect("nonzero").c.inv();
                engine::scale_in_place(&mut v, &lc);
                v
            })
            .collect();
        Self::from_vectors(module, vs)
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn elements(&self) -> &[FreeModuleElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading monomial and position of each element.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.red
            .entries
            .iter()
            .map(|e| {
                let (m, p) = e.leading();
                (m.clone(), p as usize)
            })
            .collect()
    }

    pub(crate) fn vectors(&self) -> Vec<Vector> {
        self.red.entries.iter().map(|e| e.v.clone()).collect()
    }

    pub fn normal_form(&self, f: &FreeModuleElement) -> Result<FreeModuleElement> {
        if !f.module().same_as(&self.module) {
            return Err(Error::mismatch(format!(
                "element of {:?} reduced against a basis of {:?}",
                f.module(),
                self.module
            )));
        }
        let v = self.red.full_reduce(&self.ctx, self.ctx.to_vector(f), None);
        Ok(self.ctx.to_element(&v, &self.module))
    }

    pub fn contains(&self, f: &FreeModuleElement) -> Result<bool> {
        if !f.module().same_as(&self.module) {
            return Err(Error::mismatch("membership test across modules"));
        }
        let mut v = self.ctx.to_vector(f);
        let mut t = Vec::new();
        engine::make_primitive(&mut v, &mut t);
        self.red.top_reduce(&self.ctx, None, &mut v, &mut t);
        Ok(v.is_empty())
    }

    pub fn contains_all(&self, fs: &[FreeModuleElement]) -> Result<bool> {
        for f in fs {
            if !self.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Buchberger's criterion: every S-vector of two elements with leading terms
    /// in the same position reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let weights = self.module.ring().weights().to_vec();
        let es = &self.red.entries;
        for i in 0..es.len() {
            for j in (i + 1)..es.len() {
                let (mi, pi) = es[i].leading();
                let (mj, pj) = es[j].leading();
                if pi != pj {
                    continue;
                }
                let lcm = mi.lcm(mj, &weights);
                let a = self.ctx.scaled(&es[i].v, &crate::poly::Q::one(), &mi.quotient_of(&lcm));
                let s = self.ctx.sub_scaled(&a, &crate::poly::Q::one(), &mj.quotient_of(&lcm), &es[j].v);
                if !self.red.full_reduce(&self.ctx, s, None).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of homogeneous generators sharing one module.
pub fn buchberger(gens: &[FreeModuleElement]) -> Result<GroebnerBasis> {
    let module = common_module(gens)?;
    GroebnerBasis::compute(&module, gens)
}

pub fn normal_form(f: &FreeModuleElement, basis: &GroebnerBasis) -> Result<FreeModuleElement> {
    basis.normal_form(f)
}

/// Shifts making `e_i ↦ gens[i]` a degree-preserving map.
fn generator_shifts(gens: &[FreeModuleElement]) -> Vec<i64> {
    gens.iter().map(|g| g.degree().unwrap_or(0)).collect()
}

/// Generators of the kernel of `S^m → F`, `e_i ↦ gens[i]`, in the free module
/// `⊕ S(-deg gens[i])`.
pub fn syzygies(gens: &[FreeModuleElement]) -> Result<Vec<FreeModuleElement>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    Ok(syzygy_module(gens)?.1)
}

/// Like [`syzygies`], also returning the source module of the relations.
pub fn syzygy_module(gens: &[FreeModuleElement]) -> Result<(Module, Vec<FreeModuleElement>)> {
    let module = common_module(gens)?;
    check_homogeneous(gens, "generator")?;
    let source = FreeModule::new(module.ring(), generator_shifts(gens));
    let tctx = Ctx::new(&source);
    let mut eng = Engine::new(&module, Some(&source));
    for (i, g) in gens.iter().enumerate() {
        let e = FreeModuleElement::basis(&source, i);
        eng.add_input(eng.ctx().to_vector(g), tctx.to_vector(&e));
    }
    eng.run(None);
    let out = eng
        .take_syzygies()
        .iter()
        .map(|t| tctx.to_element(t, &source))
        .collect();
    Ok((source, out))
}

/// A minimal homogeneous generating set, drawn from `gens` in ascending degree.
pub fn minimal_generators(gens: &[FreeModuleElement]) -> Result<Vec<FreeModuleElement>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let module = common_module(gens)?;
    minimal_generators_in(&module, gens)
}

pub fn minimal_generators_in(module: &Module, gens: &[FreeModuleElement]) -> Result<Vec<FreeModuleElement>> {
    check_module(module, gens)?;
    check_homogeneous(gens, "generator")?;
    let mut eng = Engine::new(module, None);
    for g in gens {
        eng.add_input(eng.ctx().to_vector(g), Vec::new());
    }
    eng.run(None);
    Ok(eng
        .minimal_inputs()
        .iter()
        .map(|&i| gens[i].clone())
        .collect())
}

/// A minimal generating set drawn from the reduced Gröbner basis, scaled to
/// primitive integer vectors. Usually far smaller coefficients than kernel
/// outputs.
pub fn tidy_generators_in(module: &Module, gens: &[FreeModuleElement]) -> Result<Vec<FreeModuleElement>> {
    check_module(module, gens)?;
    check_homogeneous(gens, "generator")?;
    let ctx = Ctx::new(module);
    let mut eng = Engine::new(module, None);
    for g in gens {
        eng.add_input(ctx.to_vector(g), Vec::new());
    }
    eng.run(None);
    let mut basis = eng.reduced_basis();
    for v in &mut basis {
        engine::make_primitive(v, &mut Vec::new());
    }
    let mut eng = Engine::new(module, None);
    for v in &basis {
        eng.add_input(v.clone(), Vec::new());
    }
    eng.run(None);
    Ok(eng
        .minimal_inputs()
        .iter()
        .map(|&i| ctx.to_element(&basis[i], module))
        .collect())
}

/// Generators of `{ x ∈ source : Σ x_i images[i] ∈ U }` where `U` is spanned by
/// `target_basis`, which must already be a Gröbner basis of `U`.
pub fn preimage(
    source: &Module,
    images: &[FreeModuleElement],
    target: &Module,
    target_basis: &GroebnerBasis,
) -> Result<Vec<FreeModuleElement>> {
    if images.len() != source.rank() {
        return Err(Error::mismatch(format!(
            "{} images for a source of rank {}",
            images.len(),
            source.rank()
        )));
    }
    check_module(target, images)?;
    if !target_basis.module().same_as(target) {
        return Err(Error::mismatch("target basis lives in another module"));
    }
    let tctx = Ctx::new(source);
    let mut eng = Engine::new(target, Some(source));
    eng.add_seed_basis(target_basis.vectors());
    for (i, img) in images.iter().enumerate() {
        let e = FreeModuleElement::basis(source, i);
        match (img.degree(), e.degree()) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Inhomogeneous(format!(
                    "image of basis vector {i} has degree {a}, expected {b}"
                )))
            }
            (None, _) if !img.is_zero() => {
                return Err(Error::Inhomogeneous(format!("image of basis vector {i} is inhomogeneous")))
            }
            _ => {}
        }
        eng.add_input(eng.ctx().to_vector(img), tctx.to_vector(&e));
    }
    eng.run(None);
    let kernel: Vec<FreeModuleElement> = eng
        .take_syzygies()
        .iter()
        .map(|t| tctx.to_element(t, source))
        .collect();
    tidy_generators_in(source, &kernel)
}

/// Minimal generators of the intersection of the submodules spanned by `a` and `b`.
pub fn module_intersection(a: &[FreeModuleElement], b: &[FreeModuleElement]) -> Result<Vec<FreeModuleElement>> {
    if a.is_empty() || b.is_empty() {
        let all: Vec<_> = a.iter().chain(b).cloned().collect();
        if !all.is_empty() {
            common_module(&all)?;
        }
        return Ok(Vec::new());
    }
    let module = common_module(a)?;
    check_module(&module, b)?;
    check_homogeneous(a, "generator")?;
    check_homogeneous(b, "generator")?;
    let gb_b = GroebnerBasis::compute(&module, b)?;
    let ctx = Ctx::new(&module);
    let mut eng = Engine::new(&module, Some(&module));
    eng.add_seed_basis(gb_b.vectors());
    for g in a {
        let v = ctx.to_vector(g);
        eng.add_input(v.clone(), v);
    }
    eng.run(None);
    let raw: Vec<FreeModuleElement> = eng
        .take_syzygies()
        .iter()
        .map(|t| ctx.to_element(t, &module))
        .collect();
    tidy_generators_in(&module, &raw)
}

/// Intersection of several submodules, folded left to right.
pub fn intersect_all(parts: &[Vec<FreeModuleElement>]) -> Result<Vec<FreeModuleElement>> {
    let mut iter = parts.iter();
    let mut acc = match iter.next() {
        Some(first) => first.clone(),
        None => return Ok(Vec::new()),
    };
    for p in iter {
        acc = module_intersection(&acc, p)?;
    }
    Ok(acc)
}

/// Whether `a` and `b` generate the same submodule of `module`.
pub fn module_equal_in(module: &Module, a: &[FreeModuleElement], b: &[FreeModuleElement]) -> Result<bool> {
    let ga = GroebnerBasis::compute(module, a)?;
    if !ga.contains_all(b)? {
        return Ok(false);
    }
    let gb = GroebnerBasis::compute(module, b)?;
    gb.contains_all(a)
}

/// Whether `a` and `b` generate the same submodule (bidirectional containment).
pub fn module_equal(a: &[FreeModuleElement], b: &[FreeModuleElement]) -> Result<bool> {
    let all: Vec<_> = a.iter().chain(b).cloned().collect();
    if all.is_empty() {
        return Ok(true);
    }
    let module = common_module(&all)?;
    module_equal_in(&module, a, b)
}
