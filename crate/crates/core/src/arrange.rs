//! Linear subspace arrangements of fixed codimension: Plücker vectors,
//! genericity, predicted generators of Derlog for generic arrangements, and the
//! associated hyperplane arrangement.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{module_equal_in, Ideal};
use crate::groebner::PRIME;
use crate::linalg::{integer_kernel, inverse, kernel, rank, rank_mod_p};
use crate::logmod::{
    derlog_of_components, derlog_with, freeness, wedge_module, DerlogOptions, DerlogRoute, FreenessOptions, Method, SubspaceData,
};
use crate::poly::wedge::subsets;
use crate::poly::{binomial, primitive_factor, FreeModuleElement, Module, Monomial, PolyRing, Polynomial, Q, Ring};
use crate::resolve::free_resolution_in;

pub const GENERICITY_SUBSET_CAP: usize = 100_000;

/// A union of pairwise distinct linear subspaces of codimension `k`, each cut
/// out by `k` independent linear forms.
#[derive(Clone, Debug)]
pub struct Arrangement {
    ring: Ring,
    k: usize,
    components: Vec<Vec<Polynomial>>,
    pluecker: Vec<Vec<Q>>,
}

/// Coefficient matrix of linear forms: row per form, column per variable.
fn coefficient_rows(forms: &[Polynomial]) -> Result<Vec<Vec<Q>>> {
    forms
        .iter()
        .map(|f| {
            let ring = f.ring();
            if f.is_zero() || f.degree() != Some(1) || !f.is_homogeneous() {
                return Err(Error::hypothesis(format!("`{f}` is not a nonzero linear form")));
            }
            Ok((0..ring.nvars()).map(|i| f.coefficient(&ring.var_monomial(i))).collect())
        })
        .collect()
}

fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = &d * &a[c][c];
        let inv = a[c][c].inv();
        for i in (c + 1)..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let v = a[i][j].sub_mul(&f, &a[c][j]);
                a[i][j] = v;
            }
        }
    }
    d
}

/// `coords[subset_index(E)]` is the minor of the constant Jacobian on columns `E`.
pub fn pluecker_vector(forms: &[Polynomial]) -> Result<Vec<Q>> {
    let rows = coefficient_rows(forms)?;
    let Some(first) = forms.first() else {
        return Err(Error::hypothesis("a component needs at least one equation"));
    };
    let n = first.ring().nvars();
    let k = forms.len();
    if rank(&rows) < k {
        return Err(Error::hypothesis("component equations are linearly dependent"));
    }
    Ok(subsets(n, k)
        .iter()
        .map(|e| {
            let sub: Vec<Vec<Q>> = rows.iter().map(|r| e.iter().map(|&c| r[c].clone()).collect()).collect();
            det(&sub)
        })
        .collect())
}

fn proportional(a: &[Q], b: &[Q]) -> bool {
    rank(&[a.to_vec(), b.to_vec()]) < 2
}

impl Arrangement {
    pub fn new(ring: &Ring, components: Vec<Vec<Polynomial>>) -> Result<Self> {
        if !ring.is_standard_graded() {
            return Err(Error::InvalidRing("arrangements live in standard graded rings".into()));
        }
        let k = components
            .first()
            .map(|c| c.len())
            .ok_or_else(|| Error::hypothesis("an arrangement needs at least one component"))?;
        if k == 0 || k > ring.nvars() {
            return Err(Error::hypothesis(format!("codimension {k} is out of range")));
        }
        let mut pluecker = Vec::with_capacity(components.len());
        for (i, c) in components.iter().enumerate() {
            if c.len() != k {
                return Err(Error::hypothesis(format!(
                    "component #{i} has {} equations, expected {k}",
                    c.len()
                )));
            }
            if c.iter().any(|f| f.ring() != ring) {
                return Err(Error::mismatch(format!("component #{i} belongs to another ring")));
            }
            let w = pluecker_vector(c).map_err(|e| Error::hypothesis(format!("component #{i}: {e}")))?;
            if let Some(j) = pluecker.iter().position(|v: &Vec<Q>| proportional(v, &w)) {
                return Err(Error::hypothesis(format!("components #{j} and #{i} coincide")));
            }
            pluecker.push(w);
        }
        Ok(Arrangement {
            ring: ring.clone(),
            k,
            components,
            pluecker,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.nvars()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> usize {
        self.components.len()
    }

    /// `C(n, k)`, the rank of `Λ^k Der`.
    pub fn wedge_rank(&self) -> usize {
        binomial(self.n(), self.k)
    }

    pub fn components(&self) -> &[Vec<Polynomial>] {
        &self.components
    }

    pub fn pluecker_vectors(&self) -> &[Vec<Q>] {
        &self.pluecker
    }

    pub fn component_ideal(&self, i: usize) -> Ideal {
        Ideal::new(&self.ring, self.components[i].clone()).expect("linear forms are homogeneous")
    }

    /// The arrangement as subspace data, with its components attached.
    pub fn subspace_data(&self) -> Result<SubspaceData> {
        let ideal = arrangement_ideal(self)?;
        SubspaceData::new(&self.ring, ideal.gens().to_vec(), self.k, None)?.with_components(self.component_data()?)
    }

    pub fn component_data(&self) -> Result<Vec<SubspaceData>> {
        (0..self.s())
            .map(|i| SubspaceData::new(&self.ring, self.components[i].clone(), self.k, Some(self.components[i].clone())))
            .collect()
    }
}

/// `I_X = ⋂ I_{X_i}` by iterated intersection, minimally generated.
pub fn arrangement_ideal_by_intersection(a: &Arrangement) -> Result<Ideal> {
    let mut acc = a.component_ideal(0);
    for i in 1..a.s() {
        acc = acc.intersection(&a.component_ideal(i))?;
    }
    Ok(acc.minimalized())
}

/// Integer points `B·(1, w)`, `w ∈ N^{r−1}`, `|w| ≤ d`, on the span of the
/// columns of `B`. A form of degree `d` vanishing at all of them vanishes on
/// the span.
fn lattice_points(basis: &[Vec<Q>], n: usize, d: u32) -> Vec<Vec<Q>> {
    let r = basis.len();
    if r == 0 {
        return Vec::new();
    }
    let mut ws: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 1..r {
        ws = ws
            .into_iter()
            .flat_map(|w| {
                let used: u32 = w.iter().sum();
                (0..=d - used).map(move |e| {
                    let mut w = w.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    ws.iter()
        .map(|w| {
            (0..n)
                .map(|j| {
                    let mut x = basis[0][j].clone();
                    for (l, &e) in w.iter().enumerate() {
                        x = &x + &(&Q::from_int(e as i64) * &basis[l + 1][j]);
                    }
                    x
                })
                .collect()
        })
        .collect()
}

fn eval_monomial(m: &Monomial, x: &[Q]) -> Q {
    let mut v = Q::one();
    for (j, xj) in x.iter().enumerate() {
        for _ in 0..m.exponent(j) {
            v = &v * xj;
        }
    }
    v
}

fn residue(q: &Q) -> u64 {
    let p = BigInt::from(PRIME);
    let r = ((q.numer() % &p) + &p) % &p;
    r.to_u64().expect("residue fits")
}

/// `I_X` by interpolation, one degree at a time. The forms of degree `d` that
/// vanish on `X` are the kernel of evaluation at lattice points of every
/// component, restricted to monomials standard for the generators found so
/// far. When that restriction has full column rank mod p, no new generator
/// lives in degree `d`; mod-p rank never exceeds the rational rank, so this
/// is exact. Minimal generators have degree at most `s`, since the
/// regularity of `s` subspaces is at most `s` (Derksen–Sidman).
pub fn arrangement_ideal(a: &Arrangement) -> Result<Ideal> {
    let n = a.n();
    let ring = &a.ring;
    if a.k == 1 {
        // distinct hyperplanes: the product is reduced
        let h = a.components.iter().fold(Polynomial::one(ring), |acc, c| &acc * &c[0]);
        return Ideal::new(ring, vec![h]);
    }
    let bases: Vec<Vec<Vec<Q>>> = a
        .components
        .iter()
        .map(|c| {
            let rows = coefficient_rows(c)?;
            Ok(kernel(&rows, n)
                .into_iter()
                .map(|v| {
                    let f = primitive_factor(v.iter());
                    v.iter().map(|x| x * &f).collect()
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut lts: Vec<Monomial> = Vec::new();
    for d in 1..=a.s() as u32 {
        let std: Vec<Monomial> =
            ring.monomials_of_degree(d).into_iter().filter(|m| !lts.iter().any(|l| l.divides(m))).collect();
        if std.is_empty() {
            break;
        }
        let rows: Vec<Vec<Q>> = bases
            .iter()
            .flat_map(|b| lattice_points(b, n, d))
            .map(|x| std.iter().map(|m| eval_monomial(m, &x)).collect())
            .collect();
        let reduced: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(residue).collect()).collect();
        let (rk, chosen) = rank_mod_p(&reduced, PRIME);
        if rk == std.len() {
            continue;
        }
        // the kernel of the rows independent mod p, checked against all rows
        let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|x| x.numer()).collect()).collect();
        let picked: Vec<Vec<BigInt>> = chosen.iter().map(|&i| rows[i].clone()).collect();
        let mut ker = integer_kernel(&picked, std.len());
        let vanishes = |v: &Vec<BigInt>| rows.iter().all(|r| r.iter().zip(v).map(|(x, y)| x * y).sum::<BigInt>().is_zero());
        if !ker.iter().all(vanishes) {
            ker = integer_kernel(&rows, std.len());
        }
        for v in ker {
            let terms = std.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero());
            gens.push(Polynomial::from_terms(ring, terms.map(|(m, c)| (m, Q::from(c)))));
        }
        lts = Ideal::new(ring, gens.clone())?.leading_monomials();
    }
    Ok(Ideal::new(ring, gens)?.minimalized())
}

/// Every family of `min(s, C(n,k))` Plücker vectors is linearly independent.
pub fn is_generic(a: &Arrangement) -> Result<bool> {
    let n_wedge = a.wedge_rank();
    let s = a.s();
    if s <= n_wedge {
        return Ok(rank(&a.pluecker) == s);
    }
    let count = binomial(s, n_wedge);
    if count > GENERICITY_SUBSET_CAP {
        return Err(Error::ResourceLimit(format!(
            "genericity needs {count} rank checks, above the cap {GENERICITY_SUBSET_CAP}"
        )));
    }
    Ok(is_generic_on(a, subsets(s, n_wedge).into_iter()))
}

/// Genericity restricted to the given component families of size `C(n,k)`.
pub fn is_generic_on(a: &Arrangement, families: impl Iterator<Item = Vec<usize>>) -> bool {
    let mut fams = families;
    fams.all(|fam| {
        let rows: Vec<Vec<Q>> = fam.iter().map(|&i| a.pluecker[i].clone()).collect();
        rank(&rows) == rows.len()
    })
}

/// Random components with coefficients in `{−9, …, 9}`, redrawn until the
/// components are pairwise distinct and, when `s ≤ C(n,k)`, generic.
pub fn random_arrangement(n: usize, k: usize, s: usize, seed: u64) -> Result<Arrangement> {
    if k == 0 || k > n || s == 0 {
        return Err(Error::hypothesis(format!("invalid arrangement shape n={n} k={k} s={s}")));
    }
    let ring = PolyRing::indexed("x", n, true)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let wedge = binomial(n, k);
    for _ in 0..1000 {
        let mut comps = Vec::with_capacity(s);
        for _ in 0..s {
            let forms: Vec<Polynomial> = (0..k)
                .map(|_| {
                    Polynomial::from_terms(
                        &ring,
                        (0..n).map(|i| (ring.var_monomial(i), Q::from_int(rng.gen_range(-9..=9)))),
                    )
                })
                .collect();
            comps.push(forms);
        }
        let Ok(a) = Arrangement::new(&ring, comps) else {
            continue;
        };
        if s > wedge || is_generic(&a)? {
            return Ok(a);
        }
    }
    Err(Error::ResourceLimit("no generic arrangement found after 1000 draws".into()))
}

/// The dual family `δ_1, …, δ_N` and the predicted minimal generators
/// `{h_{i,j} δ_i : i ≤ s} ∪ {δ_i : i > s}`.
#[derive(Clone, Debug)]
pub struct TheoremGenerators {
    pub module: Module,
    pub basis: Vec<Vec<Q>>,
    pub generators: Vec<FreeModuleElement>,
}

pub fn theorem_generators(a: &Arrangement) -> Result<TheoremGenerators> {
    let big_n = a.wedge_rank();
    let s = a.s();
    if s > big_n {
        return Err(Error::hypothesis(format!(
            "{s} components exceed C(n,k) = {big_n}; no prediction is made"
        )));
    }
    if !is_generic(a)? {
        return Err(Error::hypothesis("arrangement is not generic"));
    }
    // rows: Plücker vectors, then unit vectors chosen greedily to complete a basis
    let mut rows: Vec<Vec<Q>> = a.pluecker.clone();
    for e in 0..big_n {
        if rows.len() == big_n {
            break;
        }
        let mut unit = vec![Q::zero(); big_n];
        unit[e] = Q::one();
        rows.push(unit);
        if rank(&rows) < rows.len() {
            rows.pop();
        }
    }
    let inv = inverse(&rows).ok_or_else(|| Error::engine("completed Plücker matrix is singular"))?;
    // δ_i is column i of the inverse, so that ⟨δ_i, row_j⟩ = [i = j]
    let basis: Vec<Vec<Q>> = (0..big_n).map(|i| inv.iter().map(|r| r[i].clone()).collect()).collect();
    let module = wedge_module(a.ring(), a.k());
    let as_field = |coords: &[Q], scale: &Polynomial| {
        let mut out = FreeModuleElement::zero(&module);
        for (e, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out.set(e, scale.scale(c));
            }
        }
        out
    };
    let one = Polynomial::one(a.ring());
    let mut generators = Vec::with_capacity(s * a.k() + big_n - s);
    for (i, comp) in a.components.iter().enumerate() {
        for h in comp {
            generators.push(as_field(&basis[i], h));
        }
    }
    for b in &basis[s..] {
        generators.push(as_field(b, &one));
    }
    Ok(TheoremGenerators {
        module,
        basis,
        generators,
    })
}

/// `b_0 = s·k + C(n,k) − s`, `b_p = s·C(k, p+1)` for `1 ≤ p ≤ k−1`.
pub fn expected_generic_betti(n: usize, k: usize, s: usize) -> Vec<usize> {
    let mut b = vec![s * k + binomial(n, k) - s];
    for p in 1..k {
        b.push(s * binomial(k, p + 1));
    }
    b
}

#[derive(Clone, Copy, Debug)]
pub struct GenericCheckOptions {
    pub route: DerlogRoute,
    pub jacobian: bool,
    pub seed: u64,
}

impl Default for GenericCheckOptions {
    fn default() -> Self {
        GenericCheckOptions {
            route: DerlogRoute::Components,
            jacobian: true,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericTheoremReport {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub predicted_generators: usize,
    pub derlog_generators: usize,
    pub module_equal: bool,
    pub betti: Vec<usize>,
    pub expected_betti: Vec<usize>,
    pub free_pdim: bool,
    pub free_jacobian: Option<bool>,
    pub pass: bool,
}

/// Compares Derlog with the predicted generators, the Betti table with the
/// predicted one, and checks freeness.
pub fn verify_generic_theorem(a: &Arrangement, opts: &GenericCheckOptions) -> Result<GenericTheoremReport> {
    let predicted = theorem_generators(a)?;
    let dopts = DerlogOptions {
        route: opts.route,
        ..DerlogOptions::default()
    };
    // I_X is only formed when a route needs it
    let mut x = None;
    let d = match opts.route {
        DerlogRoute::Components | DerlogRoute::Auto => {
            derlog_of_components(&a.ring, a.k(), &a.component_data()?, dopts.max_subsets)?
        }
        _ => derlog_with(x.insert(a.subspace_data()?), &dopts)?,
    };
    let equal = module_equal_in(&d.module, &d.generators, &predicted.generators)?;
    let res = free_resolution_in(&d.module, &d.generators)?;
    let betti = res.betti().total;
    let expected = expected_generic_betti(a.n(), a.k(), a.s());
    let free_pdim = res.length() == a.k() as i64 - 1;
    let free_jacobian = if opts.jacobian {
        let x = match x {
            Some(x) => x,
            None => a.subspace_data()?,
        };
        let rep = freeness(
            &x,
            &FreenessOptions {
                method: Method::Jacobian,
                seed: opts.seed,
                derlog: DerlogOptions::default(),
            },
        )?;
        Some(rep.free)
    } else {
        None
    };
    let pass = equal
        && betti == expected
        && free_pdim
        && free_jacobian.unwrap_or(true)
        && predicted.generators.len() == expected[0];
    Ok(GenericTheoremReport {
        n: a.n(),
        k: a.k(),
        s: a.s(),
        predicted_generators: predicted.generators.len(),
        derlog_generators: d.generators.len(),
        module_equal: equal,
        betti,
        expected_betti: expected,
        free_pdim,
        free_jacobian,
        pass,
    })
}

/// One hyperplane per component in `C^{C(n,k)}` with the Plücker vector as normal;
/// variable `p<i>` is the `i`-th wedge basis element in colex order.
pub fn associated_hyperplane_arrangement(a: &Arrangement) -> Result<Arrangement> {
    let ring = PolyRing::indexed("p", a.wedge_rank(), false)?;
    let comps = a
        .pluecker
        .iter()
        .map(|w| {
            vec![Polynomial::from_terms(
                &ring,
                w.iter().enumerate().map(|(i, c)| (ring.var_monomial(i), c.clone())),
            )]
        })
        .collect();
    Arrangement::new(&ring, comps)
}
