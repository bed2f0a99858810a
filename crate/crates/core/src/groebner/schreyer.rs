//! Schreyer frames: a (usually non-minimal) graded free resolution whose
//! levels are Gröbner bases for the induced orders, so no completion is
//! needed beyond the first level.

use crate::error::Result;
use crate::poly::{FreeModule, FreeModuleElement, Module, Monomial, Q};

use super::engine::{make_primitive, Ctx, Reducer, Term, Vector};
use super::{check_homogeneous, check_module, GroebnerBasis};

/// One level of a frame: the source module and the images of its basis.
pub(crate) struct Level {
    pub source: Module,
    pub images: Vec<FreeModuleElement>,
}

fn unit_vector(ctx: &Ctx, pos: usize) -> Vector {
    vec![Term {
        mono: ctx.ring().one_monomial(),
        pos: pos as u32,
        c: Q::one(),
    }]
}

/// Orders basis elements so that, within one position, the exponent of
/// variable `var` in the leading monomial is non-increasing. Syzygy leading
/// terms then avoid that variable, which bounds the frame length by `n`.
fn sort_level(level: &mut [Vector], var: usize) {
    level.sort_by(|a, b| {
        let (x, y) = (a.last().expect("nonzero"), b.last().expect("nonzero"));
        let ex = if var < x.mono.nvars() { x.mono.exponent(var) } else { 0 };
        let ey = if var < y.mono.nvars() { y.mono.exponent(var) } else { 0 };
        x.pos.cmp(&y.pos).then(ey.cmp(&ex))
    });
}

/// Syzygies of a Gröbner basis `g` (for `ctx`) forming a Gröbner basis of the
/// syzygy module for the Schreyer order, which is returned alongside.
fn next_level(ctx: &Ctx, g: &[Vector]) -> (Ctx, Vec<Vector>) {
    let leads: Vec<(Monomial, u32)> = g
        .iter()
        .map(|v| {
            let t = v.last().expect("nonzero");
            (t.mono.clone(), t.pos)
        })
        .collect();
    let tctx = Ctx::schreyer(ctx, leads.clone());
    let mut red = Reducer::default();
    for (k, v) in g.iter().enumerate() {
        red.push(v.clone(), unit_vector(&tctx, k), false);
    }
    let weights = ctx.ring().weights().to_vec();
    let mut out = Vec::new();
    for i in 0..g.len() {
        let (li, pi) = &leads[i];
        // leading multipliers of the pair syzygies on e_i
        let cands: Vec<(usize, Monomial, Monomial)> = ((i + 1)..g.len())
            .filter(|&j| leads[j].1 == *pi)
            .map(|j| {
                let lcm = li.lcm(&leads[j].0, &weights);
                (j, li.quotient_of(&lcm), lcm)
            })
            .collect();
        for (a, (j, q, lcm)) in cands.iter().enumerate() {
            let redundant = cands
                .iter()
                .enumerate()
                .any(|(b, (_, q2, _))| b != a && q2.divides(q) && (q2 != q || b < a));
            if redundant {
                continue;
            }
            let j = *j;
            let qj = leads[j].0.quotient_of(lcm);
            let (ci, cj) = super::engine::pair_multipliers(
                &g[i].last().expect("nonzero").c,
                &g[j].last().expect("nonzero").c,
            );
            let mut v = ctx.sub_scaled(&ctx.scaled(&g[i], &ci, q), &cj, &qj, &g[j]);
            let ei = tctx.scaled(&unit_vector(&tctx, i), &ci, q);
            let mut t = tctx.sub_scaled(&ei, &cj, &qj, &unit_vector(&tctx, j));
            red.top_reduce(ctx, Some(&tctx), &mut v, &mut t);
            debug_assert!(v.is_empty(), "S-vector of a Gröbner basis must reduce to zero");
            make_primitive(&mut t, &mut Vec::new());
            debug_assert!({
                let lt = t.last().expect("nonzero syzygy");
                lt.pos as usize == i && &lt.mono == q
            });
            out.push(t);
        }
    }
    (tctx, out)
}

/// A Schreyer frame over `ambient` resolving the span of `gens`. Level 0
/// holds a Gröbner basis of the span.
pub(crate) fn schreyer_frame(ambient: &Module, gens: &[FreeModuleElement]) -> Result<Vec<Level>> {
    check_module(ambient, gens)?;
    check_homogeneous(gens, "generator")?;
    let gb = GroebnerBasis::compute(ambient, gens)?;
    let mut ctx = Ctx::new(ambient);
    let mut target = ambient.clone();
    let mut level: Vec<Vector> = gb
        .vectors()
        .into_iter()
        .map(|mut v| {
            make_primitive(&mut v, &mut Vec::new());
            v
        })
        .collect();
    let mut out = Vec::new();
    let mut var = 0;
    while !level.is_empty() {
        sort_level(&mut level, var);
        var += 1;
        let (next_ctx, syz) = next_level(&ctx, &level);
        let source = FreeModule::new(ambient.ring(), next_ctx.shifts().to_vec());
        let images = level.iter().map(|v| ctx.to_element(v, &target)).collect();
        out.push(Level {
            source: source.clone(),
            images,
        });
        ctx = next_ctx;
        target = source;
        level = syz;
    }
    Ok(out)
}
