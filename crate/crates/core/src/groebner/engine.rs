//! Buchberger completion over graded free modules with optional cofactor tracking.
//!
//! Every basis element carries a *tracker*: a vector in a second free module that
//! records how the element was obtained from the inputs. Whenever a value reduces
//! to zero, its tracker is a kernel element of the map `tracker ↦ value`. With
//! trackers `e_i` this yields syzygies; with other trackers it yields
//! intersections and preimages. Completion only touches values; kernel elements
//! are collected, not completed, which is enough to generate the kernel.
//!
//! Pair selection follows the normal strategy: lowest degree first, S-pairs
//! before inputs of the same degree, ties by the module order of the lcm.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use num_integer::Integer;

use crate::poly::{primitive_factor, FreeModuleElement, Module, Monomial, Polynomial, Q, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mono: Monomial,
    pub pos: u32,
    pub c: Q,
}

/// Terms in ascending module order; the leading term is last.
pub(crate) type Vector = Vec<Term>;

/// Module monomial order: position-last with the ring order, graded by
/// `deg(m) + shift` when the ring order is degree compatible. A Schreyer
/// context instead compares `m·e_i` through the image `m·lt(g_i)` in the
/// previous module, lower index winning ties.
#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    ring: Ring,
    shifts: Vec<i64>,
    graded: bool,
    schreyer: Option<Arc<Schreyer>>,
}

#[derive(Debug)]
struct Schreyer {
    prev: Ctx,
    leads: Vec<(Monomial, u32)>,
}

impl Ctx {
    pub fn new(module: &Module) -> Self {
        Ctx {
            ring: module.ring().clone(),
            shifts: module.shifts().to_vec(),
            graded: module.ring().order().is_degree_compatible(),
            schreyer: None,
        }
    }

    /// The order induced on `⊕ S e_i` by `e_i ↦ g_i` with `lt(g_i) = leads[i]`.
    pub fn schreyer(prev: &Ctx, leads: Vec<(Monomial, u32)>) -> Self {
        Ctx {
            ring: prev.ring.clone(),
            shifts: leads.iter().map(|(m, p)| prev.total_degree(m, *p)).collect(),
            graded: prev.graded,
            schreyer: Some(Arc::new(Schreyer { prev: prev.clone(), leads })),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn total_degree(&self, m: &Monomial, pos: u32) -> i64 {
        m.weighted_degree() as i64 + self.shifts[pos as usize]
    }

    pub fn cmp(&self, am: &Monomial, ap: u32, bm: &Monomial, bp: u32) -> Ordering {
        let first = if self.graded {
            self.total_degree(am, ap).cmp(&self.total_degree(bm, bp))
        } else {
            Ordering::Equal
        };
        if let Some(s) = &self.schreyer {
            return first.then_with(|| {
                let (la, pa) = &s.leads[ap as usize];
                let (lb, pb) = &s.leads[bp as usize];
                s.prev
                    .cmp(&am.mul(la), *pa, &bm.mul(lb), *pb)
                    .then_with(|| bp.cmp(&ap))
            });
        }
        first
            .then_with(|| self.ring.cmp_monomials(am, bm))
            .then_with(|| bp.cmp(&ap))
    }

    pub fn sort(&self, v: &mut Vector) {
        v.sort_by(|a, b| self.cmp(&a.mono, a.pos, &b.mono, b.pos));
    }

    pub fn to_vector(&self, e: &FreeModuleElement) -> Vector {
        let mut v: Vector = e
            .components()
            .flat_map(|(i, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    mono: m.clone(),
                    pos: i as u32,
                    c: c.clone(),
                })
            })
            .collect();
        self.sort(&mut v);
        v
    }

    pub fn to_element(&self, v: &Vector, module: &Module) -> FreeModuleElement {
        let mut per: BTreeMap<u32, Vec<(Monomial, Q)>> = BTreeMap::new();
        for t in v.iter().rev() {
            per.entry(t.pos).or_default().push((t.mono.clone(), t.c.clone()));
        }
        let mut out = FreeModuleElement::zero(module);
        for (pos, mut terms) in per {
            // descending module order within one slot is descending ring order
            terms.sort_by(|a, b| self.ring.cmp_monomials(&b.0, &a.0));
            out.set(pos as usize, Polynomial::from_sorted_terms(&self.ring, terms));
        }
        out
    }

    /// `v - c * q * g`.
    pub fn sub_scaled(&self, v: &Vector, c: &Q, q: &Monomial, g: &Vector) -> Vector {
        let mut out = Vec::with_capacity(v.len() + g.len());
        let unit = q.is_one();
        let shifted = |t: &Term| if unit { t.mono.clone() } else { t.mono.mul(q) };
        let (mut i, mut j) = (0, 0);
        let mut gm = g.first().map(&shifted);
        while i < v.len() && j < g.len() {
            let m = gm.as_ref().expect("current g term");
            match self.cmp(&v[i].mono, v[i].pos, m, g[j].pos) {
                Ordering::Less => {
                    out.push(v[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(Term {
                        mono: gm.take().expect("current g term"),
                        pos: g[j].pos,
                        c: -(c * &g[j].c),
                    });
                    j += 1;
                    gm = g.get(j).map(&shifted);
                }
                Ordering::Equal => {
                    let nc = v[i].c.sub_mul(c, &g[j].c);
                    if !nc.is_zero() {
                        out.push(Term {
                            mono: v[i].mono.clone(),
                            pos: v[i].pos,
                            c: nc,
                        });
                    }
                    i += 1;
                    j += 1;
                    gm = g.get(j).map(&shifted);
                }
            }
        }
        out.extend_from_slice(&v[i..]);
        while j < g.len() {
            out.push(Term {
                mono: gm.take().expect("current g term"),
                pos: g[j].pos,
                c: -(c * &g[j].c),
            });
            j += 1;
            gm = g.get(j).map(&shifted);
        }
        out
    }

    pub fn scaled(&self, v: &Vector, c: &Q, q: &Monomial) -> Vector {
        v.iter()
            .map(|t| Term {
                mono: t.mono.mul(q),
                pos: t.pos,
                c: &t.c * c,
            })
            .collect()
    }
}

pub(crate) fn scale_in_place(v: &mut Vector, c: &Q) {
    if c.is_one() {
        return;
    }
    for t in v.iter_mut() {
        t.c = &t.c * c;
    }
}

/// Scales `v` (and `t` alongside) to coprime integer coefficients with a
/// positive leading coefficient.
pub(crate) fn make_primitive(v: &mut Vector, t: &mut Vector) {
    let Some(lead) = v.last() else {
        return;
    };
    let mut f = primitive_factor(v.iter().map(|t| &t.c));
    if lead.c.is_negative() {
        f = -f;
    }
    scale_in_place(v, &f);
    scale_in_place(t, &f);
}

fn make_monic(v: &mut Vector) {
    let lc = v.last().expect("nonzero").c.inv();
    scale_in_place(v, &lc);
}

fn gcd_i64(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a.abs()
}

#[derive(Clone, Debug)]
pub(crate) struct Entry {
    pub v: Vector,
    pub t: Vector,
    lt: Monomial,
    pos: u32,
    mask: u64,
    seed: bool,
}

impl Entry {
    pub fn leading(&self) -> (&Monomial, u32) {
        (&self.lt, self.pos)
    }
}

/// Leading-term lookup shared by the completion engine and finished bases.
#[derive(Clone, Debug, Default)]
pub(crate) struct Reducer {
    pub entries: Vec<Entry>,
    by_pos: HashMap<u32, Vec<usize>>,
}

impl Reducer {
    /// Normalizes each vector to be monic.
    pub fn from_vectors(vs: Vec<Vector>) -> Self {
        let mut r = Reducer::default();
        for mut v in vs {
            make_monic(&mut v);
            r.push(v, Vec::new(), false);
        }
        r
    }

    pub fn push(&mut self, v: Vector, t: Vector, seed: bool) -> usize {
        let lead = v.last().expect("nonzero basis element");
        let idx = self.entries.len();
        self.by_pos.entry(lead.pos).or_default().push(idx);
        self.entries.push(Entry {
            lt: lead.mono.clone(),
            pos: lead.pos,
            mask: lead.mono.support_mask(),
            v,
            t,
            seed,
        });
        idx
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn at_position(&self, pos: u32) -> &[usize] {
        self.by_pos.get(&pos).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn find_divisor(&self, m: &Monomial, pos: u32, skip: Option<usize>) -> Option<usize> {
        let mask = m.support_mask();
        self.at_position(pos).iter().copied().find(|&k| {
            Some(k) != skip && {
                let e = &self.entries[k];
                e.mask & !mask == 0 && e.lt.divides(m)
            }
        })
    }

    /// Reduces the leading term until it is irreducible or the value vanishes.
    /// Integer vectors stay integral: against a non-monic reducer both sides
    /// are scaled by cofactors of the leading coefficients.
    pub fn top_reduce(&self, ctx: &Ctx, tctx: Option<&Ctx>, v: &mut Vector, t: &mut Vector) {
        let mut steps = 0usize;
        while let Some(lead) = v.last() {
            let Some(k) = self.find_divisor(&lead.mono, lead.pos, None) else {
                break;
            };
            let e = &self.entries[k];
            let q = e.lt.quotient_of(&lead.mono);
            let b = &e.v.last().expect("nonzero").c;
            let (c, mv) = if b.is_one() {
                (lead.c.clone(), Q::one())
            } else {
                pair_multipliers(b, &lead.c)
            };
            scale_in_place(v, &mv);
            *v = ctx.sub_scaled(v, &c, &q, &e.v);
            if let Some(tc) = tctx {
                scale_in_place(t, &mv);
                if !e.t.is_empty() {
                    *t = tc.sub_scaled(t, &c, &q, &e.t);
                }
            }
            steps += 1;
            if steps % 16 == 0 {
                make_primitive(v, t);
            }
        }
    }

    /// Complete reduction of every term; `skip` excludes one entry as reducer.
    pub fn full_reduce(&self, ctx: &Ctx, mut v: Vector, skip: Option<usize>) -> Vector {
        let mut done: Vec<Term> = Vec::new();
        while let Some(lead) = v.last() {
            match self.find_divisor(&lead.mono, lead.pos, skip) {
                Some(k) => {
                    let e = &self.entries[k];
                    let q = e.lt.quotient_of(&lead.mono);
                    let c = lead.c.clone();
                    v = ctx.sub_scaled(&v, &c, &q, &e.v);
                }
                None => done.push(v.pop().expect("nonempty")),
            }
        }
        done.reverse();
        done
    }
}

#[derive(Clone, Debug)]
enum Task {
    Pair { i: usize, j: usize, lcm: Monomial, pos: u32 },
    Input(usize),
}

/// Statistics useful when profiling large instances.
#[derive(Clone, Debug, Default)]
pub(crate) struct Stats {
    pub pairs_reduced: usize,
    pub chain_skipped: usize,
    pub coprime_skipped: usize,
    pub zero_reductions: usize,
}

pub(crate) struct Engine {
    ctx: Ctx,
    tctx: Option<Ctx>,
    red: Reducer,
    buckets: BTreeMap<i64, Vec<Task>>,
    pending: HashSet<(usize, usize)>,
    inputs: Vec<Option<(Vector, Vector)>>,
    syz: Vec<Vector>,
    minimal: Vec<usize>,
    rank_one: bool,
    pub stats: Stats,
}

impl Engine {
    pub fn new(value_module: &Module, tracker_module: Option<&Module>) -> Self {
        Engine {
            ctx: Ctx::new(value_module),
            tctx: tracker_module.map(Ctx::new),
            red: Reducer::default(),
            buckets: BTreeMap::new(),
            pending: HashSet::new(),
            inputs: Vec::new(),
            syz: Vec::new(),
            minimal: Vec::new(),
            rank_one: value_module.rank() == 1,
            stats: Stats::default(),
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Adds vectors already forming a Gröbner basis (with zero trackers);
    /// pairs among them are never formed. Must precede all inputs.
    pub fn add_seed_basis(&mut self, basis: Vec<Vector>) {
        assert!(self.inputs.is_empty(), "seeds must be added first");
        for mut v in basis {
            if v.is_empty() {
                continue;
            }
            make_primitive(&mut v, &mut Vec::new());
            let idx = self.red.push(v, Vec::new(), true);
            self.make_pairs(idx);
        }
    }

    pub fn add_input(&mut self, v: Vector, t: Vector) -> usize {
        let idx = self.inputs.len();
        let deg = match v.last() {
            Some(lead) => self.degree_of(&lead.mono, lead.pos),
            None => i64::MIN,
        };
        self.inputs.push(Some((v, t)));
        self.buckets.entry(deg).or_default().push(Task::Input(idx));
        idx
    }

    fn degree_of(&self, m: &Monomial, pos: u32) -> i64 {
        if self.ctx.graded {
            self.ctx.total_degree(m, pos)
        } else {
            m.weighted_degree() as i64
        }
    }

    fn make_pairs(&mut self, new: usize) {
        let pos = self.red.entries[new].pos;
        let weights = self.ctx.ring.weights().to_vec();
        for &old in self.red.at_position(pos) {
            if old == new {
                continue;
            }
            let (a, b) = (&self.red.entries[old], &self.red.entries[new]);
            if a.seed && b.seed {
                continue;
            }
            let lcm = a.lt.lcm(&b.lt, &weights);
            let deg = self.degree_of(&lcm, pos);
            self.pending.insert((old, new));
            self.buckets.entry(deg).or_default().push(Task::Pair {
                i: old,
                j: new,
                lcm,
                pos,
            });
        }
    }

    fn add_entry(&mut self, mut v: Vector, mut t: Vector) -> usize {
        make_primitive(&mut v, &mut t);
        let idx = self.red.push(v, t, false);
        self.make_pairs(idx);
        idx
    }

    fn emit(&mut self, mut t: Vector) {
        if !t.is_empty() {
            make_primitive(&mut t, &mut Vec::new());
            self.syz.push(t);
        }
    }

    fn chain_redundant(&self, i: usize, j: usize, lcm: &Monomial, pos: u32) -> bool {
        let mask = lcm.support_mask();
        self.red.at_position(pos).iter().any(|&k| {
            if k == i || k == j {
                return false;
            }
            let e = &self.red.entries[k];
            e.mask & !mask == 0
                && e.lt.divides(lcm)
                && !self.pending.contains(&(i.min(k), i.max(k)))
                && !self.pending.contains(&(j.min(k), j.max(k)))
        })
    }

    fn process_pair(&mut self, i: usize, j: usize, lcm: Monomial, pos: u32) {
        self.pending.remove(&(i, j));
        if self.chain_redundant(i, j, &lcm, pos) {
            self.stats.chain_skipped += 1;
            return;
        }
        let (ei, ej) = (&self.red.entries[i], &self.red.entries[j]);
        if self.rank_one && ei.lt.coprime(&ej.lt) {
            self.stats.coprime_skipped += 1;
            if let Some(tc) = &self.tctx {
                // Koszul lift: v_j * t_i - v_i * t_j
                let a = tc_poly_times(tc, &ej.v, &ei.t);
                let b = tc_poly_times(tc, &ei.v, &ej.t);
                let k = tc.sub_scaled(&a, &Q::one(), &tc.ring.one_monomial(), &b);
                self.emit(k);
            }
            return;
        }
        self.stats.pairs_reduced += 1;
        let qi = ei.lt.quotient_of(&lcm);
        let qj = ej.lt.quotient_of(&lcm);
        let (ci, cj) = pair_multipliers(&ei.v.last().expect("nonzero").c, &ej.v.last().expect("nonzero").c);
        let mut v = self.ctx.sub_scaled(&self.ctx.scaled(&ei.v, &ci, &qi), &cj, &qj, &ej.v);
        let mut t = match &self.tctx {
            Some(tc) => tc.sub_scaled(&tc.scaled(&ei.t, &ci, &qi), &cj, &qj, &ej.t),
            None => Vec::new(),
        };
        self.red.top_reduce(&self.ctx, self.tctx.as_ref(), &mut v, &mut t);
        if v.is_empty() {
            self.stats.zero_reductions += 1;
            self.emit(t);
        } else {
            self.add_entry(v, t);
        }
    }

    fn process_input(&mut self, idx: usize) {
        let (mut v, mut t) = self.inputs[idx].take().expect("input processed once");
        self.red.top_reduce(&self.ctx, self.tctx.as_ref(), &mut v, &mut t);
        if v.is_empty() {
            self.emit(t);
        } else {
            self.minimal.push(idx);
            self.add_entry(v, t);
        }
    }

    /// Processes every task of degree `<= max_degree` (all tasks when `None`).
    pub fn run(&mut self, max_degree: Option<i64>) {
        loop {
            let Some((&deg, _)) = self.buckets.iter().next() else {
                return;
            };
            if max_degree.is_some_and(|d| deg > d) {
                return;
            }
            let mut tasks = self.buckets.remove(&deg).expect("bucket");
            let ctx = &self.ctx;
            tasks.sort_by(|a, b| match (a, b) {
                (Task::Pair { .. }, Task::Input(_)) => Ordering::Less,
                (Task::Input(_), Task::Pair { .. }) => Ordering::Greater,
                (Task::Input(x), Task::Input(y)) => x.cmp(y),
                (
                    Task::Pair { i, j, lcm, pos },
                    Task::Pair {
                        i: i2,
                        j: j2,
                        lcm: l2,
                        pos: p2,
                    },
                ) => ctx
                    .cmp(lcm, *pos, l2, *p2)
                    .then_with(|| (j, i).cmp(&(j2, i2))),
            });
            for task in tasks {
                match task {
                    Task::Pair { i, j, lcm, pos } => self.process_pair(i, j, lcm, pos),
                    Task::Input(idx) => self.process_input(idx),
                }
            }
        }
    }

    /// Input indices that were not in the span of earlier material; for
    /// homogeneous input these index a minimal generating set.
    pub fn minimal_inputs(&self) -> &[usize] {
        &self.minimal
    }

    pub fn take_syzygies(&mut self) -> Vec<Vector> {
        std::mem::take(&mut self.syz)
    }

    /// The reduced Gröbner basis of the values, sorted by ascending leading term.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        reduce_basis(&self.ctx, &self.red)
    }
}

/// `(c_i, c_j)` with `c_i·lc_i = c_j·lc_j`, integral when both are integers.
pub(crate) fn pair_multipliers(lci: &Q, lcj: &Q) -> (Q, Q) {
    match (lci.to_i64(), lcj.to_i64()) {
        (Some(a), Some(b)) => {
            let g = gcd_i64(a, b);
            (Q::from_int(b / g), Q::from_int(a / g))
        }
        _ if lci.is_integer() && lcj.is_integer() => {
            let (a, b) = (lci.numer(), lcj.numer());
            let g = a.gcd(&b);
            (Q::from(&b / &g), Q::from(&a / &g))
        }
        _ => (Q::one(), lci / lcj),
    }
}

fn tc_poly_times(tc: &Ctx, p: &Vector, t: &Vector) -> Vector {
    if t.is_empty() {
        return Vec::new();
    }
    // p lives in the rank-1 value module; reinterpret its terms as scalars.
    let mut acc = Vec::new();
    for term in p {
        acc = tc.sub_scaled(&acc, &(-&term.c), &term.mono, t);
    }
    acc
}

/// Minimalizes and tail-reduces the basis held by `red`.
pub(crate) fn reduce_basis(ctx: &Ctx, red: &Reducer) -> Vec<Vector> {
    let n = red.len();
    let mut keep = Vec::new();
    for a in 0..n {
        let (am, ap) = red.entries[a].leading();
        let redundant = (0..n).any(|b| {
            if b == a {
                return false;
            }
            let (bm, bp) = red.entries[b].leading();
            bp == ap && bm.divides(am) && (bm != am || b < a)
        });
        if !redundant {
            keep.push(a);
        }
    }
    let minimal = Reducer::from_vectors(keep.iter().map(|&a| red.entries[a].v.clone()).collect());
    let mut out: Vec<Vector> = (0..minimal.len())
        .map(|idx| {
            let mut v = minimal.entries[idx].v.clone();
            let lead = v.pop().expect("nonzero");
            let mut tail = minimal.full_reduce(ctx, v, Some(idx));
            tail.push(lead);
            tail
        })
        .collect();
    out.sort_by(|a, b| {
        let (x, y) = (a.last().expect("nonzero"), b.last().expect("nonzero"));
        ctx.cmp(&x.mono, x.pos, &y.mono, y.pos)
    });
    out
}
