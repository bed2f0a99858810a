//! Multi-logarithmic k-vector fields: the contraction pairing, the module
//! Derlog(X)^k, restricted Jacobian ideals and the two freeness tests.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    dimension_upper_bound, intersect_all, preimage, tidy_generators_in, GroebnerBasis, HilbertNumerator, Ideal,
};
use crate::poly::wedge::subsets;
use crate::poly::{
    binomial, combination, jacobian, minor, require_homogeneous, subset_index, FreeModule, FreeModuleElement, Module, Polynomial,
    Q, Ring,
};
use crate::resolve::{depth_and_cm, free_resolution_in, BettiTable};

pub const DEFAULT_MAX_SUBSETS: usize = 5000;
pub const DEFAULT_CI_ATTEMPTS: usize = 32;

/// The free module `Λ^k Der` with basis `∂_E`, `E` in colex order. The slot of
/// `∂_E` has shift `k − w(E)`, so constant fields have degree 0 in the standard
/// grading and the pairing is degree preserving up to a fixed offset.
pub fn wedge_module(ring: &Ring, k: usize) -> Module {
    let w = ring.weights();
    let shifts = subsets(ring.nvars(), k)
        .iter()
        .map(|e| k as i64 - e.iter().map(|&i| w[i] as i64).sum::<i64>())
        .collect();
    FreeModule::new(ring, shifts)
}

/// The basis field `∂_E` in `module = wedge_module(ring, |E|)`.
pub fn wedge_basis_element(module: &Module, e: &[usize]) -> Result<FreeModuleElement> {
    let n = module.ring().nvars();
    let idx = subset_index(e, n, e.len())?;
    if module.rank() != binomial(n, e.len()) {
        return Err(Error::mismatch("module is not the matching exterior power"));
    }
    Ok(FreeModuleElement::basis(module, idx))
}

/// `⟨δ, df_1 ∧ … ∧ df_k⟩ = Σ_E a_E · det(∂f_i/∂x_j)_{j ∈ E}`.
pub fn contract_pairing(delta: &FreeModuleElement, f: &[Polynomial]) -> Result<Polynomial> {
    let ring = delta.ring();
    let n = ring.nvars();
    let k = f.len();
    if delta.rank() != binomial(n, k) {
        return Err(Error::mismatch(format!(
            "a field of rank {} cannot be paired with {k} forms in {n} variables",
            delta.rank()
        )));
    }
    if let Some(i) = f.iter().position(|p| p.ring() != ring) {
        return Err(Error::mismatch(format!("form #{i} belongs to another ring")));
    }
    let jac = jacobian(f);
    let all = subsets(n, k);
    let mut acc = Polynomial::zero(ring);
    for (idx, a) in delta.components() {
        acc = &acc + &(a * &minor(ring, &jac, &all[idx]));
    }
    Ok(acc)
}

/// A reduced equidimensional subspace given by homogeneous generators of its
/// ideal, its codimension, optionally a complete intersection containing it and
/// optionally its irreducible components.
#[derive(Clone, Debug)]
pub struct SubspaceData {
    pub ring: Ring,
    pub ideal: Ideal,
    pub codim: usize,
    pub ci: Option<Vec<Polynomial>>,
    pub components: Option<Vec<SubspaceData>>,
}

impl SubspaceData {
    /// Validates homogeneity, `k ≤ n`, `dim S/I = n − k`, and `ci ⊆ I` when given.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>, codim: usize, ci: Option<Vec<Polynomial>>) -> Result<Self> {
        let n = ring.nvars();
        if codim > n {
            return Err(Error::hypothesis(format!("codimension {codim} exceeds {n} variables")));
        }
        let ideal = Ideal::new(ring, gens)?;
        let dim = ideal.krull_dimension();
        if dim != (n - codim) as i64 {
            return Err(Error::hypothesis(format!(
                "declared codimension {codim} but the ideal has codimension {}",
                n as i64 - dim
            )));
        }
        let data = SubspaceData {
            ring: ring.clone(),
            ideal,
            codim,
            ci: None,
            components: None,
        };
        match ci {
            Some(f) => data.with_ci(f),
            None => Ok(data),
        }
    }

    pub fn with_ci(mut self, f: Vec<Polynomial>) -> Result<Self> {
        if f.len() != self.codim {
            return Err(Error::hypothesis(format!(
                "complete intersection has {} equations, codimension is {}",
                f.len(),
                self.codim
            )));
        }
        require_homogeneous(&f, "complete intersection equation")?;
        if let Some(i) = f.iter().position(|p| !self.ideal.contains(p)) {
            return Err(Error::hypothesis(format!("equation `{}` does not vanish on X", f[i])));
        }
        self.ci = Some(f);
        Ok(self)
    }

    pub fn with_components(mut self, components: Vec<SubspaceData>) -> Result<Self> {
        if let Some(c) = components.iter().position(|c| c.codim != self.codim || c.ring != self.ring) {
            return Err(Error::hypothesis(format!("component #{c} has another ring or codimension")));
        }
        self.components = Some(components);
        Ok(self)
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }
}

/// How [`derlog_with`] computes the module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerlogRoute {
    /// Kernel of the stacked pairing matrix modulo `I_X`.
    Stacked,
    /// Intersection of the component modules (requires components).
    Components,
    /// `Components` when components are known and `k > 1`, otherwise `Stacked`.
    Auto,
}

#[derive(Clone, Copy, Debug)]
pub struct DerlogOptions {
    pub max_subsets: usize,
    pub route: DerlogRoute,
}

impl Default for DerlogOptions {
    fn default() -> Self {
        DerlogOptions {
            max_subsets: DEFAULT_MAX_SUBSETS,
            route: DerlogRoute::Stacked,
        }
    }
}

/// Minimal generators of Derlog(X)^k inside `wedge_module(ring, k)`.
#[derive(Clone, Debug)]
pub struct Derlog {
    pub module: Module,
    pub generators: Vec<FreeModuleElement>,
}

pub fn derlog(x: &SubspaceData) -> Result<Derlog> {
    derlog_with(x, &DerlogOptions::default())
}

pub fn derlog_with(x: &SubspaceData, opts: &DerlogOptions) -> Result<Derlog> {
    let route = match (opts.route, &x.components) {
        (DerlogRoute::Auto, Some(_)) if x.codim > 1 => DerlogRoute::Components,
        (DerlogRoute::Auto, _) => DerlogRoute::Stacked,
        (r, _) => r,
    };
    match route {
        DerlogRoute::Components => {
            let comps = x
                .components
                .as_ref()
                .ok_or_else(|| Error::hypothesis("component route needs known components"))?;
            derlog_of_components(&x.ring, x.codim, comps, opts.max_subsets)
        }
        _ => derlog_stacked(x, opts.max_subsets),
    }
}

/// Derlog of a union as the intersection of the Derlog modules of its
/// components; `I_X` itself is never formed.
pub fn derlog_of_components(ring: &Ring, codim: usize, comps: &[SubspaceData], max_subsets: usize) -> Result<Derlog> {
    if let Some(c) = comps.iter().find(|c| c.codim != codim) {
        return Err(Error::mismatch(format!("component of codimension {} in a codimension {codim} union", c.codim)));
    }
    let parts = comps
        .iter()
        .map(|c| derlog_stacked(c, max_subsets).map(|d| d.generators))
        .collect::<Result<Vec<_>>>()?;
    let module = wedge_module(ring, codim);
    let generators = intersect_all(&parts)?;
    Ok(Derlog { module, generators })
}

/// `δ ∈ Derlog` iff `⟨δ, dh_{i_1} ∧ … ∧ dh_{i_k}⟩ ∈ I_X` for all k-subsets of the
/// minimal generators of `I_X`: the kernel of `Λ^k Der → ⊕_ρ S/I_X`.
fn derlog_stacked(x: &SubspaceData, max_subsets: usize) -> Result<Derlog> {
    let ring = &x.ring;
    let n = ring.nvars();
    let k = x.codim;
    let source = wedge_module(ring, k);
    if k == 0 {
        let generators = vec![FreeModuleElement::basis(&source, 0)];
        return Ok(Derlog { module: source, generators });
    }
    let h: Vec<Polynomial> = x.ideal.minimalized().gens().to_vec();
    let r = h.len();
    let count = binomial(r, k);
    if count > max_subsets {
        return Err(Error::ResourceLimit(format!(
            "{r} generators give {count} subsets of size {k}, above the limit {max_subsets}"
        )));
    }
    let rows = subsets(r, k);
    let hdeg: Vec<i64> = h.iter().map(|p| p.degree().expect("nonzero") as i64).collect();
    let jac = jacobian(&h);
    let cols = subsets(n, k);
    let gx = x.ideal.basis();
    // one condition at a time: a preimage into a single copy of S/I_X
    let mut generators: Vec<FreeModuleElement> = (0..cols.len()).map(|i| FreeModuleElement::basis(&source, i)).collect();
    for rho in &rows {
        let sub: Vec<Vec<Polynomial>> = rho.iter().map(|&i| jac[i].clone()).collect();
        let minors: Vec<Polynomial> = cols.iter().map(|e| minor(ring, &sub, e)).collect();
        let target = FreeModule::new(ring, vec![k as i64 - rho.iter().map(|&i| hdeg[i]).sum::<i64>()]);
        let images: Vec<FreeModuleElement> = generators
            .iter()
            .map(|g| {
                let mut p = Polynomial::zero(ring);
                for (slot, a) in g.components() {
                    if !minors[slot].is_zero() {
                        p = &p + &(a * &minors[slot]);
                    }
                }
                FreeModuleElement::monomial_vector(&target, 0, x.ideal.normal_form(&p))
            })
            .collect();
        if images.iter().all(|v| v.is_zero()) {
            continue;
        }
        let aux = FreeModule::new(ring, generators.iter().map(|g| g.degree().expect("homogeneous")).collect());
        let seeds: Vec<FreeModuleElement> =
            gx.iter().map(|g| FreeModuleElement::monomial_vector(&target, 0, g.clone())).collect();
        let target_basis = GroebnerBasis::from_known_basis(&target, &seeds);
        let kernel = preimage(&aux, &images, &target, &target_basis)?;
        let combined: Vec<FreeModuleElement> = kernel
            .iter()
            .map(|c| combination(&source, &c.dense(), &generators))
            .filter(|v| !v.is_zero())
            .collect();
        generators = tidy_generators_in(&source, &combined)?;
    }
    Ok(Derlog { module: source, generators })
}

/// `J_{X/C}`: the k×k minors of the Jacobian of `f` together with `I_X`.
pub fn restricted_jacobian_ideal(f: &[Polynomial], ix: &Ideal) -> Result<Ideal> {
    require_homogeneous(f, "complete intersection equation")?;
    if let Some(i) = f.iter().position(|p| !ix.contains(p)) {
        return Err(Error::hypothesis(format!("`{}` is not contained in I_X", f[i])));
    }
    let mut gens = jacobian_minors(f);
    gens.extend(ix.gens().iter().cloned());
    Ideal::new(ix.ring(), gens)
}

fn jacobian_minors(f: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = f.first() else {
        return Vec::new();
    };
    let ring = first.ring();
    let jac = jacobian(f);
    subsets(ring.nvars(), f.len())
        .iter()
        .map(|e| minor(ring, &jac, e))
        .filter(|m| !m.is_zero())
        .collect()
}

/// `(f)` has codimension `|f|`, which in a polynomial ring characterizes regular sequences.
pub fn is_regular_sequence(f: &[Polynomial]) -> Result<bool> {
    if let Some(done) = regular_mod_p(f)? {
        return Ok(done);
    }
    let ring = f[0].ring();
    let ideal = Ideal::new(ring, f.to_vec())?;
    Ok(ideal.krull_dimension() == ring.nvars() as i64 - f.len() as i64)
}

/// `Some(true)` when a mod-p dimension bound already certifies regularity.
fn regular_mod_p(f: &[Polynomial]) -> Result<Option<bool>> {
    let Some(first) = f.first() else {
        return Ok(Some(true));
    };
    if f.iter().any(|p| p.is_zero()) {
        return Ok(Some(false));
    }
    let ring = first.ring();
    require_homogeneous(f, "sequence element")?;
    let target = ring.nvars() as i64 - f.len() as i64;
    Ok((dimension_upper_bound(ring, f) <= target).then_some(true))
}

/// `dim S/((f) + J_C) ≤ n − k − 1`, first tried mod p.
fn singular_locus_small(f: &[Polynomial], exact: bool) -> Result<bool> {
    let Some(first) = f.first() else {
        return Ok(true);
    };
    let ring = first.ring();
    let mut gens = f.to_vec();
    gens.extend(jacobian_minors(f));
    let target = ring.nvars() as i64 - f.len() as i64 - 1;
    if dimension_upper_bound(ring, &gens) <= target {
        return Ok(true);
    }
    if !exact {
        return Ok(false);
    }
    Ok(Ideal::new(ring, gens)?.krull_dimension() <= target)
}

/// For a regular sequence: reduced iff the singular locus `(f) + J_C` has
/// codimension at least `k + 1`.
pub fn is_reduced_complete_intersection(f: &[Polynomial]) -> Result<bool> {
    if !is_regular_sequence(f)? {
        return Err(Error::hypothesis("not a regular sequence"));
    }
    singular_locus_small(f, true)
}

/// A certified reduced complete intersection of codimension `k` containing `V(I_X)`.
#[derive(Clone, Debug)]
pub struct CiChoice {
    pub equations: Vec<Polynomial>,
    pub attempts: usize,
}

/// Random homogeneous combinations of the generators of `I_X`, degree matched
/// with monomial multipliers, retried until certified.
pub fn choose_complete_intersection(ix: &Ideal, k: usize, seed: u64) -> Result<CiChoice> {
    choose_complete_intersection_with(ix, k, seed, DEFAULT_CI_ATTEMPTS)
}

pub fn choose_complete_intersection_with(ix: &Ideal, k: usize, seed: u64, attempts: usize) -> Result<CiChoice> {
    let ring = ix.ring();
    let mut gens = ix.minimalized().gens().to_vec();
    gens.sort_by_key(|g| g.degree());
    if gens.len() < k {
        return Err(Error::hypothesis(format!(
            "no reduced complete intersection: {} generators for codimension {k}",
            gens.len()
        )));
    }
    if k == 0 {
        return Ok(CiChoice { equations: Vec::new(), attempts: 0 });
    }
    // candidates are only accepted on a mod-p certificate, which keeps
    // rejected attempts cheap
    let certified =
        |f: &[Polynomial]| -> Result<bool> { Ok(regular_mod_p(f)? == Some(true) && singular_locus_small(f, false)?) };
    if gens.len() == k && certified(&gens)? {
        return Ok(CiChoice { equations: gens, attempts: 0 });
    }
    let degs: Vec<u32> = gens.iter().map(|g| g.degree().expect("nonzero")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<i64> = vec![-3, -2, -1, 1, 2, 3];
    for attempt in 1..=attempts {
        let bump = ((attempt - 1) / 8) as u32;
        let mut f = Vec::with_capacity(k);
        for j in 0..k {
            let target = degs[j.min(degs.len() - 1)] + bump;
            let mut acc = Polynomial::zero(ring);
            for (g, &d) in gens.iter().zip(&degs) {
                if d > target {
                    continue;
                }
                let monos = ring.monomials_of_degree(target - d);
                let Some(m) = monos.choose(&mut rng) else {
                    continue;
                };
                let c = Q::from_int(*coeffs.choose(&mut rng).expect("nonempty"));
                acc = &acc + &g.mul_monomial(m, &c);
            }
            f.push(acc);
        }
        if f.iter().all(|p| !p.is_zero()) && certified(&f)? {
            return Ok(CiChoice { equations: f, attempts: attempt });
        }
    }
    Err(Error::hypothesis(format!(
        "no reduced complete intersection found after {attempts} attempts; supply one explicitly"
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Pdim,
    Jacobian,
    Both,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pdim" => Ok(Method::Pdim),
            "jacobian" => Ok(Method::Jacobian),
            "both" => Ok(Method::Both),
            other => Err(Error::schema("/method", format!("unknown method `{other}`"))),
        }
    }
}

/// Invariants of `S/J_{X/C}` for one complete intersection `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobianData {
    pub ci: Vec<String>,
    pub unit: bool,
    pub dim: Option<i64>,
    pub depth: Option<i64>,
    pub cohen_macaulay: Option<bool>,
    pub hilbert_numerator: Option<Vec<i64>>,
    pub free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisFlags {
    pub equidimensional: &'static str,
    pub reduced: &'static str,
    pub ci_certified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub free: bool,
    pub verdict_pdim: Option<bool>,
    pub verdict_jacobian: Option<bool>,
    pub pdim: Option<i64>,
    pub betti: Option<BettiTable>,
    pub derlog_generators: Option<usize>,
    pub jacobian: Option<JacobianData>,
    pub flags: HypothesisFlags,
}

#[derive(Clone, Copy, Debug)]
pub struct FreenessOptions {
    pub method: Method,
    pub seed: u64,
    pub derlog: DerlogOptions,
}

impl Default for FreenessOptions {
    fn default() -> Self {
        FreenessOptions {
            method: Method::Both,
            seed: 0,
            derlog: DerlogOptions::default(),
        }
    }
}

/// The Jacobian criterion for one complete intersection: free iff `S/J_{X/C} = 0`,
/// or it is Cohen–Macaulay of dimension `n − k − 1`.
pub fn jacobian_criterion(x: &SubspaceData, f: &[Polynomial]) -> Result<JacobianData> {
    let n = x.nvars() as i64;
    let k = x.codim as i64;
    let j = restricted_jacobian_ideal(f, &x.ideal)?;
    let ci = f.iter().map(|p| p.to_string()).collect();
    if j.is_unit() {
        return Ok(JacobianData {
            ci,
            unit: true,
            dim: None,
            depth: None,
            cohen_macaulay: None,
            hilbert_numerator: None,
            free: true,
        });
    }
    let d = depth_and_cm(&j)?;
    let num: HilbertNumerator = j.hilbert_numerator();
    Ok(JacobianData {
        ci,
        unit: false,
        dim: Some(d.dimension),
        depth: Some(d.depth),
        cohen_macaulay: Some(d.cohen_macaulay),
        hilbert_numerator: Some(num.coeffs().to_vec()),
        free: d.cohen_macaulay && d.dimension == n - k - 1,
    })
}

/// Result of the projective-dimension criterion.
#[derive(Clone, Debug)]
pub struct PdimData {
    pub derlog: Derlog,
    pub betti: BettiTable,
    pub pdim: i64,
    pub free: bool,
}

/// Free iff `pdim Derlog(X)^k = k − 1`. Also checks `pdim ≥ k − 1` and the rank
/// identity `Σ (−1)^i b_i = C(n, k)`.
pub fn pdim_criterion(x: &SubspaceData, opts: &DerlogOptions) -> Result<PdimData> {
    if x.codim == 0 {
        return Err(Error::hypothesis("freeness needs codimension at least 1"));
    }
    let d = derlog_with(x, opts)?;
    let res = free_resolution_in(&d.module, &d.generators)?;
    let betti = res.betti();
    let pdim = res.length();
    let k = x.codim as i64;
    if pdim < k - 1 {
        return Err(Error::engine(format!("pdim {pdim} is below the lower bound {}", k - 1)));
    }
    let rank = binomial(x.nvars(), x.codim) as i64;
    if betti.euler_characteristic() != rank {
        return Err(Error::engine(format!(
            "alternating Betti sum {} differs from the rank {rank}",
            betti.euler_characteristic()
        )));
    }
    Ok(PdimData {
        derlog: d,
        betti,
        pdim,
        free: pdim == k - 1,
    })
}

pub fn freeness(x: &SubspaceData, opts: &FreenessOptions) -> Result<FreenessReport> {
    if x.codim == 0 {
        return Err(Error::hypothesis("freeness needs codimension at least 1"));
    }
    let mut report = FreenessReport {
        free: false,
        verdict_pdim: None,
        verdict_jacobian: None,
        pdim: None,
        betti: None,
        derlog_generators: None,
        jacobian: None,
        flags: HypothesisFlags {
            equidimensional: "assumed",
            reduced: "assumed",
            ci_certified: None,
        },
    };
    if matches!(opts.method, Method::Pdim | Method::Both) {
        let p = pdim_criterion(x, &opts.derlog)?;
        report.verdict_pdim = Some(p.free);
        report.pdim = Some(p.pdim);
        report.derlog_generators = Some(p.derlog.generators.len());
        report.betti = Some(p.betti);
    }
    if matches!(opts.method, Method::Jacobian | Method::Both) {
        let f = match &x.ci {
            Some(f) => {
                let ok = is_regular_sequence(f)? && is_reduced_complete_intersection(f)?;
                if !ok {
                    return Err(Error::hypothesis("the supplied equations are not a reduced complete intersection"));
                }
                f.clone()
            }
            None => choose_complete_intersection(&x.ideal, x.codim, opts.seed)?.equations,
        };
        report.flags.ci_certified = Some(true);
        let j = jacobian_criterion(x, &f)?;
        report.verdict_jacobian = Some(j.free);
        report.jacobian = Some(j);
    }
    report.free = match (report.verdict_pdim, report.verdict_jacobian) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::engine(format!(
                "criteria disagree: projective dimension says {a}, Jacobian ideal says {b}"
            )))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => unreachable!("a method always runs"),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::module_equal_in;
    use crate::poly::{parse_all, parse_polynomial, PolyRing};

    fn space(r: &Ring, gens: &[&str], k: usize) -> SubspaceData {
        SubspaceData::new(r, parse_all(gens, r).unwrap(), k, None).unwrap()
    }

    fn field(m: &Module, entries: &[(&[usize], &str)]) -> FreeModuleElement {
        let r = m.ring().clone();
        let mut out = FreeModuleElement::zero(m);
        for (e, p) in entries {
            let b = wedge_basis_element(m, e).unwrap();
            out = out.add(&b.scale(&parse_polynomial(p, &r).unwrap()));
        }
        out
    }

    #[test]
    fn pairing_examples() {
        let r = PolyRing::new(&["x", "y", "z", "t"]).unwrap();
        let m = wedge_module(&r, 2);
        let dxy = field(&m, &[(&[0, 1], "1")]);
        let p = |s: &[&str]| parse_all(s, &r).unwrap();
        assert_eq!(contract_pairing(&dxy, &p(&["x", "y"])).unwrap().to_string(), "1");
        assert_eq!(contract_pairing(&dxy, &p(&["x - z", "y - t"])).unwrap().to_string(), "1");
        let any = field(&m, &[(&[0, 2], "x*y"), (&[1, 3], "z")]);
        assert!(contract_pairing(&any, &p(&["x*z + t^2", "x*z + t^2"])).unwrap().is_zero());
        assert!(matches!(contract_pairing(&any, &p(&["x"])), Err(Error::Mismatch(_))));
    }

    #[test]
    fn coordinate_subspace_derlog() {
        let r = PolyRing::new(&["x1", "x2", "x3"]).unwrap();
        let x = space(&r, &["x1", "x2"], 2);
        let d = derlog(&x).unwrap();
        let m = &d.module;
        let expected = vec![
            field(m, &[(&[0, 1], "x1")]),
            field(m, &[(&[0, 1], "x2")]),
            field(m, &[(&[0, 2], "1")]),
            field(m, &[(&[1, 2], "1")]),
        ];
        assert!(module_equal_in(m, &d.generators, &expected).unwrap());
        let p = pdim_criterion(&x, &DerlogOptions::default()).unwrap();
        assert_eq!((p.pdim, p.free), (1, true));
    }

    #[test]
    fn normal_crossing_derlog() {
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let d = derlog(&space(&r, &["x*y"], 1)).unwrap();
        let m = &d.module;
        let expected = vec![field(m, &[(&[0], "x")]), field(m, &[(&[1], "y")])];
        assert!(module_equal_in(m, &d.generators, &expected).unwrap());

        let d = derlog(&space(&r, &["x", "y"], 2)).unwrap();
        let m = &d.module;
        let expected = vec![field(m, &[(&[0, 1], "x")]), field(m, &[(&[0, 1], "y")])];
        assert!(module_equal_in(m, &d.generators, &expected).unwrap());
    }

    #[test]
    fn restricted_jacobian_examples() {
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let ix = Ideal::new(&r, parse_all(&["x*y"], &r).unwrap()).unwrap();
        let j = restricted_jacobian_ideal(&parse_all(&["x*y"], &r).unwrap(), &ix).unwrap();
        assert!(j.equals(&Ideal::new(&r, parse_all(&["x", "y"], &r).unwrap()).unwrap()));
        let ix = Ideal::new(&r, parse_all(&["x"], &r).unwrap()).unwrap();
        assert!(restricted_jacobian_ideal(&parse_all(&["x"], &r).unwrap(), &ix).unwrap().is_unit());
        assert!(matches!(
            restricted_jacobian_ideal(&parse_all(&["y"], &r).unwrap(), &ix),
            Err(Error::Hypothesis(_))
        ));
        let r4 = PolyRing::new(&["x", "y", "u", "v"]).unwrap();
        let f = parse_all(&["x*y", "u*v"], &r4).unwrap();
        let ix = Ideal::new(&r4, f.clone()).unwrap();
        let j = restricted_jacobian_ideal(&f, &ix).unwrap();
        let expected = Ideal::new(&r4, parse_all(&["y*v", "y*u", "x*v", "x*u", "x*y", "u*v"], &r4).unwrap()).unwrap();
        assert!(j.equals(&expected));
        assert_eq!(j.krull_dimension(), 1);
    }

    #[test]
    fn ci_checkers() {
        let r = PolyRing::new(&["x", "y", "z", "t"]).unwrap();
        let p = |s: &[&str]| parse_all(s, &r).unwrap();
        assert!(is_regular_sequence(&p(&["x", "y"])).unwrap());
        assert!(!is_regular_sequence(&p(&["x", "x*y"])).unwrap());
        assert!(is_regular_sequence(&p(&["x*y", "z*t"])).unwrap());
        assert!(is_reduced_complete_intersection(&p(&["x*y", "z*t"])).unwrap());
        assert!(is_reduced_complete_intersection(&p(&["x*y"])).unwrap());
        assert!(!is_reduced_complete_intersection(&p(&["x^2"])).unwrap());
        assert!(is_reduced_complete_intersection(&p(&["x", "x*y"])).is_err());
    }

    #[test]
    fn choosing_cis() {
        let r = PolyRing::new(&["x", "y", "z", "t"]).unwrap();
        let ix = Ideal::new(&r, parse_all(&["x*y"], &r).unwrap()).unwrap();
        let c = choose_complete_intersection(&ix, 1, 0).unwrap();
        assert_eq!(c.equations[0].to_string(), "x*y");
        let ix = Ideal::new(&r, parse_all(&["x*z", "x*t", "y*z", "y*t"], &r).unwrap()).unwrap();
        let c = choose_complete_intersection(&ix, 2, 1).unwrap();
        assert!(is_reduced_complete_intersection(&c.equations).unwrap());
        assert!(c.equations.iter().all(|f| ix.contains(f)));
        let again = choose_complete_intersection(&ix, 2, 1).unwrap();
        assert_eq!(c.equations, again.equations);
        let ix = Ideal::new(&r, parse_all(&["x^2"], &r).unwrap()).unwrap();
        assert!(matches!(choose_complete_intersection(&ix, 1, 0), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn coordinate_lines_are_free() {
        let r = PolyRing::new(&["x", "y", "z"]).unwrap();
        let x = space(&r, &["x*y", "x*z", "y*z"], 2);
        let rep = freeness(&x, &FreenessOptions::default()).unwrap();
        assert!(rep.free);
        assert_eq!(rep.verdict_jacobian, Some(true));
    }

    #[test]
    fn declared_codimension_is_checked() {
        let r = PolyRing::new(&["x", "y", "z"]).unwrap();
        let err = SubspaceData::new(&r, parse_all(&["x", "y"], &r).unwrap(), 1, None);
        assert!(matches!(err, Err(Error::Hypothesis(_))));
    }
}
