//! Products `X₁×X₂`, star products `X₁*X₂ = X₁×C^m ∪ C^n×X₂`, the mixed
//! wedge module, and checks of the freeness and depth statements about them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{module_equal_in, Ideal};
use crate::logmod::{freeness, wedge_module, Derlog, FreenessOptions, FreenessReport, SubspaceData};
use crate::poly::wedge::subsets;
use crate::poly::{binomial, subset_index, FreeModuleElement, Module, PolyRing, Polynomial, Ring};
use crate::resolve::{depth_and_cm, free_resolution_in};

/// `S = S₁ ⊗ S₂` with the left variables first.
#[derive(Clone, Debug)]
pub struct JoinedRing {
    pub left: Ring,
    pub right: Ring,
    pub joined: Ring,
    pub left_map: Vec<usize>,
    pub right_map: Vec<usize>,
}

/// Joins two rings; a variable name occurring on both sides becomes `L.name`
/// and `R.name`.
pub fn ring_join(r1: &Ring, r2: &Ring) -> Result<JoinedRing> {
    if r1.order() != r2.order() {
        return Err(Error::InvalidRing("cannot join rings with different monomial orders".into()));
    }
    let clash: BTreeSet<&String> = r1.names().iter().filter(|n| r2.var_index(n).is_some()).collect();
    let rename = |prefix: &str, n: &String| {
        if clash.contains(n) {
            format!("{prefix}.{n}")
        } else {
            n.clone()
        }
    };
    let mut names: Vec<String> = r1.names().iter().map(|n| rename("L", n)).collect();
    names.extend(r2.names().iter().map(|n| rename("R", n)));
    let mut weights = r1.weights().to_vec();
    weights.extend_from_slice(r2.weights());
    let joined = PolyRing::with_order(&names, &weights, r1.order())?;
    let n1 = r1.nvars();
    Ok(JoinedRing {
        left: r1.clone(),
        right: r2.clone(),
        joined,
        left_map: (0..n1).collect(),
        right_map: (n1..n1 + r2.nvars()).collect(),
    })
}

impl JoinedRing {
    pub fn nvars(&self) -> usize {
        self.joined.nvars()
    }

    pub fn left_poly(&self, p: &Polynomial) -> Polynomial {
        p.map_variables(&self.joined, &self.left_map)
    }

    pub fn right_poly(&self, p: &Polynomial) -> Polynomial {
        p.map_variables(&self.joined, &self.right_map)
    }

    /// `S·I` for an ideal of the left ring.
    pub fn left_ideal(&self, i: &Ideal) -> Result<Ideal> {
        Ideal::new(&self.joined, i.gens().iter().map(|p| self.left_poly(p)).collect())
    }

    pub fn right_ideal(&self, i: &Ideal) -> Result<Ideal> {
        Ideal::new(&self.joined, i.gens().iter().map(|p| self.right_poly(p)).collect())
    }

    /// `ι₁`: a k-vector field in the left variables as one on the joined ring.
    pub fn left_field(&self, target: &Module, k: usize, f: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.embed_field(target, k, f, &self.left_map, self.left.nvars())
    }

    pub fn right_field(&self, target: &Module, k: usize, f: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.embed_field(target, k, f, &self.right_map, self.right.nvars())
    }

    fn embed_field(
        &self,
        target: &Module,
        k: usize,
        f: &FreeModuleElement,
        vars: &[usize],
        n: usize,
    ) -> Result<FreeModuleElement> {
        let all = subsets(n, k);
        let slots = all
            .iter()
            .map(|e| {
                let mapped: Vec<usize> = e.iter().map(|&i| vars[i]).collect();
                subset_index(&mapped, self.nvars(), k)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(f.reindex(target, &slots, Some(vars)))
    }
}

fn check_factor(x: &SubspaceData, r: &Ring, side: &str) -> Result<()> {
    if &x.ring != r {
        return Err(Error::mismatch(format!("{side} factor lives in another ring")));
    }
    Ok(())
}

/// `X₁ × X₂`, cut out by `S·I₁ + S·I₂`. A factor of codimension 0 with the
/// zero ideal embeds the other factor as `X × C^p`.
pub fn product_subspace(x1: &SubspaceData, x2: &SubspaceData, jr: &JoinedRing) -> Result<SubspaceData> {
    check_factor(x1, &jr.left, "left")?;
    check_factor(x2, &jr.right, "right")?;
    let mut gens: Vec<Polynomial> = x1.ideal.gens().iter().map(|p| jr.left_poly(p)).collect();
    gens.extend(x2.ideal.gens().iter().map(|p| jr.right_poly(p)));
    let side_ci = |x: &SubspaceData| match (&x.ci, x.codim) {
        (Some(f), _) => Some(f.clone()),
        (None, 0) => Some(Vec::new()),
        (None, _) => None,
    };
    let ci = match (side_ci(x1), side_ci(x2)) {
        (Some(a), Some(b)) => {
            let f: Vec<Polynomial> = a
                .iter()
                .map(|p| jr.left_poly(p))
                .chain(b.iter().map(|p| jr.right_poly(p)))
                .collect();
            Some(f)
        }
        _ => None,
    };
    SubspaceData::new(&jr.joined, gens, x1.codim + x2.codim, ci)
}

/// `X₁ * X₂` for factors of equal codimension, cut out by `(S·I₁)(S·I₂)`.
/// The product is checked against the intersection `S·I₁ ∩ S·I₂`.
pub fn star_subspace(x1: &SubspaceData, x2: &SubspaceData, jr: &JoinedRing) -> Result<SubspaceData> {
    check_factor(x1, &jr.left, "left")?;
    check_factor(x2, &jr.right, "right")?;
    if x1.codim != x2.codim {
        return Err(Error::hypothesis(format!(
            "star product needs equal codimension, got {} and {}",
            x1.codim, x2.codim
        )));
    }
    let a = jr.left_ideal(&x1.ideal)?;
    let b = jr.right_ideal(&x2.ideal)?;
    let prod = a.product(&b)?;
    if !prod.equals(&a.intersection(&b)?) {
        return Err(Error::engine("product of extended ideals differs from their intersection"));
    }
    SubspaceData::new(&jr.joined, prod.minimalized().gens().to_vec(), x1.codim, None)
}

/// Constant k-vector fields `∂_E` of the joined ring, split by whether `E`
/// lies in the left block, the right block, or meets both.
#[derive(Clone, Debug)]
pub struct MixedWedge {
    pub module: Module,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub mixed: Vec<usize>,
}

impl MixedWedge {
    /// The generators `∂_E` of `D₁,₂`.
    pub fn mixed_generators(&self) -> Vec<FreeModuleElement> {
        self.mixed.iter().map(|&i| FreeModuleElement::basis(&self.module, i)).collect()
    }
}

pub fn mixed_wedge_module(jr: &JoinedRing, k: usize) -> Result<MixedWedge> {
    let n1 = jr.left.nvars();
    let n = jr.nvars();
    if k > n {
        return Err(Error::mismatch(format!("k = {k} exceeds {n} variables")));
    }
    let module = wedge_module(&jr.joined, k);
    let (mut left, mut right, mut mixed) = (Vec::new(), Vec::new(), Vec::new());
    for (i, e) in subsets(n, k).iter().enumerate() {
        let in_left = e.iter().filter(|&&v| v < n1).count();
        if in_left == k {
            left.push(i);
        } else if in_left == 0 {
            right.push(i);
        } else {
            mixed.push(i);
        }
    }
    debug_assert_eq!(mixed.len(), binomial(n, k) - binomial(n1, k) - binomial(n - n1, k));
    Ok(MixedWedge { module, left, right, mixed })
}

/// Freeness verdicts on both factors and the product.
#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub left: FreenessReport,
    pub right: FreenessReport,
    pub product: FreenessReport,
    pub biconditional: bool,
    /// `pdim X = pdim X₁ + pdim X₂ + 1`, checked when both factors are free.
    pub pdim_sum: Option<bool>,
    pub left_cohen_macaulay: bool,
    pub right_cohen_macaulay: bool,
    pub pass: bool,
}

fn cohen_macaulay(x: &SubspaceData) -> Result<bool> {
    Ok(x.ideal.is_zero() || depth_and_cm(&x.ideal)?.cohen_macaulay)
}

pub fn verify_product_theorem(
    x1: &SubspaceData,
    x2: &SubspaceData,
    jr: &JoinedRing,
    opts: &FreenessOptions,
) -> Result<ProductReport> {
    let left_cm = cohen_macaulay(x1)?;
    let right_cm = cohen_macaulay(x2)?;
    if !(left_cm && right_cm) {
        return Err(Error::hypothesis("product theorem needs Cohen-Macaulay factors"));
    }
    let x = product_subspace(x1, x2, jr)?;
    let left = freeness(x1, opts)?;
    let right = freeness(x2, opts)?;
    let product = freeness(&x, opts)?;
    let biconditional = (left.free && right.free) == product.free;
    let pdim_sum = match (left.free && right.free, left.pdim, right.pdim, product.pdim) {
        (true, Some(a), Some(b), Some(c)) => Some(c == a + b + 1),
        _ => None,
    };
    Ok(ProductReport {
        pass: biconditional && pdim_sum != Some(false),
        left,
        right,
        product,
        biconditional,
        pdim_sum,
        left_cohen_macaulay: left_cm,
        right_cohen_macaulay: right_cm,
    })
}

/// Freeness and Derlog Betti numbers of `X` and `X × C^p` agree.
#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingReport {
    pub original: FreenessReport,
    pub embedded: FreenessReport,
    pub pass: bool,
}

pub fn verify_embedding_independence(x: &SubspaceData, extra: &Ring, opts: &FreenessOptions) -> Result<EmbeddingReport> {
    let jr = ring_join(&x.ring, extra)?;
    let affine = SubspaceData::new(extra, Vec::new(), 0, None)?;
    let embedded = freeness(&product_subspace(x, &affine, &jr)?, opts)?;
    let original = freeness(x, opts)?;
    let same_betti = match (&original.betti, &embedded.betti) {
        (Some(a), Some(b)) => a.total == b.total,
        _ => true,
    };
    Ok(EmbeddingReport {
        pass: original.free == embedded.free && original.pdim == embedded.pdim && same_betti,
        original,
        embedded,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StarReport {
    pub codim: usize,
    pub derlog_generators: usize,
    pub mixed_generators: usize,
    pub decomposition_equal: bool,
    pub direct_sum: bool,
    pub free_left: bool,
    pub free_right: bool,
    pub free_star: bool,
    pub biconditional: bool,
    pub pdim_left: i64,
    pub pdim_right: i64,
    pub pdim_star: i64,
    pub pdim_is_max: bool,
    pub pass: bool,
}

fn slot_support(gens: &[FreeModuleElement]) -> BTreeSet<usize> {
    gens.iter().flat_map(|g| g.components().map(|(i, _)| i)).collect()
}

pub fn verify_star_decomposition(
    x1: &SubspaceData,
    x2: &SubspaceData,
    jr: &JoinedRing,
    opts: &FreenessOptions,
) -> Result<StarReport> {
    let k = x1.codim;
    let star = star_subspace(x1, x2, jr)?;
    let d1 = crate::logmod::derlog_with(x1, &opts.derlog)?;
    let d2 = crate::logmod::derlog_with(x2, &opts.derlog)?;
    let d = crate::logmod::derlog_with(&star, &opts.derlog)?;
    let w = mixed_wedge_module(jr, k)?;
    let embed = |d: &Derlog, left: bool| -> Result<Vec<FreeModuleElement>> {
        d.generators
            .iter()
            .map(|g| {
                if left {
                    jr.left_field(&w.module, k, g)
                } else {
                    jr.right_field(&w.module, k, g)
                }
            })
            .collect()
    };
    let g1 = embed(&d1, true)?;
    let g2 = embed(&d2, false)?;
    let g12 = w.mixed_generators();
    let mut all = g1.clone();
    all.extend(g2.iter().cloned());
    all.extend(g12.iter().cloned());
    let decomposition_equal = module_equal_in(&w.module, &all, &d.generators)?;
    let (s1, s2, s12) = (slot_support(&g1), slot_support(&g2), slot_support(&g12));
    let direct_sum = s1.is_disjoint(&s2) && s1.is_disjoint(&s12) && s2.is_disjoint(&s12);
    let pdim_of = |m: &Module, gens: &[FreeModuleElement]| -> Result<i64> { Ok(free_resolution_in(m, gens)?.length()) };
    let pdim_left = pdim_of(&d1.module, &d1.generators)?;
    let pdim_right = pdim_of(&d2.module, &d2.generators)?;
    let pdim_star = pdim_of(&d.module, &d.generators)?;
    let free = |p: i64| p == k as i64 - 1;
    let (free_left, free_right, free_star) = (free(pdim_left), free(pdim_right), free(pdim_star));
    let biconditional = (free_left && free_right) == free_star;
    // D₁,₂ is free, so the star module's resolution is the direct sum of the factors'
    let pdim_is_max = pdim_star == pdim_left.max(pdim_right).max(0);
    Ok(StarReport {
        codim: k,
        derlog_generators: d.generators.len(),
        mixed_generators: g12.len(),
        decomposition_equal,
        direct_sum,
        free_left,
        free_right,
        free_star,
        biconditional,
        pdim_left,
        pdim_right,
        pdim_star,
        pdim_is_max,
        pass: decomposition_equal && direct_sum && biconditional && pdim_is_max,
    })
}

/// `V(f + g)` for `f`, `g` in disjoint variable sets.
pub fn thom_sebastiani_sum(f: &Polynomial, g: &Polynomial, jr: &JoinedRing) -> Result<SubspaceData> {
    if f.ring() != &jr.left || g.ring() != &jr.right {
        return Err(Error::mismatch("summands must live in the left and right rings"));
    }
    if let (Some(a), Some(b)) = (f.degree(), g.degree()) {
        if a != b {
            return Err(Error::Inhomogeneous(format!(
                "summands have weighted degrees {a} and {b}; f + g is not homogeneous"
            )));
        }
    }
    let h = &jr.left_poly(f) + &jr.right_poly(g);
    if h.is_zero() {
        return Err(Error::hypothesis("f + g is zero"));
    }
    SubspaceData::new(&jr.joined, vec![h.clone()], 1, Some(vec![h]))
}

/// The subspace cut out by `(h) + J_h`, without taking a radical.
pub fn singular_subspace(h: &Polynomial) -> Result<SubspaceData> {
    let ring = h.ring();
    let mut gens = vec![h.clone()];
    for i in 0..ring.nvars() {
        gens.push(h.partial_derivative(i)?);
    }
    let ideal = Ideal::new(ring, gens)?;
    let dim = ideal.krull_dimension();
    if dim < 0 {
        return Err(Error::hypothesis("the hypersurface is smooth: singular locus is empty"));
    }
    let codim = ring.nvars() - dim as usize;
    SubspaceData::new(ring, ideal.minimalized().gens().to_vec(), codim, None)
}

/// The depth and Cohen-Macaulay statements about `S·I + S·J` and `S·I ∩ S·J`
/// evaluated on one pair of ideals in disjoint variables.
#[derive(Clone, Debug, Serialize)]
pub struct DepthIdentities {
    pub depth_left: i64,
    pub depth_right: i64,
    pub depth_sum: i64,
    pub sum_additive: bool,
    pub product_equals_intersection: bool,
    pub depth_intersection: i64,
    /// Checked only when both depths are below their ring dimensions.
    pub intersection_plus_one: Option<bool>,
    pub cm_intersection: bool,
    /// Both quotients CM of dimension one less than their rings.
    pub cm_factors_condition: bool,
    pub cm_equivalence: bool,
    pub pass: bool,
}

pub fn depth_identities(i1: &Ideal, i2: &Ideal, jr: &JoinedRing) -> Result<DepthIdentities> {
    let (n1, n2) = (jr.left.nvars() as i64, jr.right.nvars() as i64);
    let l = depth_and_cm(i1)?;
    let r = depth_and_cm(i2)?;
    let a = jr.left_ideal(i1)?;
    let b = jr.right_ideal(i2)?;
    let sum = depth_and_cm(&a.sum(&b)?)?;
    let meet = a.intersection(&b)?;
    let product_equals_intersection = a.product(&b)?.equals(&meet);
    let m = depth_and_cm(&meet)?;
    let intersection_plus_one = (l.depth < n1 && r.depth < n2).then(|| m.depth == l.depth + r.depth + 1);
    let cm_factors_condition = l.cohen_macaulay && r.cohen_macaulay && l.dimension == n1 - 1 && r.dimension == n2 - 1;
    let sum_additive = sum.depth == l.depth + r.depth;
    let cm_equivalence = m.cohen_macaulay == cm_factors_condition;
    Ok(DepthIdentities {
        depth_left: l.depth,
        depth_right: r.depth,
        depth_sum: sum.depth,
        sum_additive,
        product_equals_intersection,
        depth_intersection: m.depth,
        intersection_plus_one,
        cm_intersection: m.cohen_macaulay,
        cm_factors_condition,
        cm_equivalence,
        pass: sum_additive && product_equals_intersection && intersection_plus_one != Some(false) && cm_equivalence,
    })
}
