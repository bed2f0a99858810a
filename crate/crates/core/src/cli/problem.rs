//! Problem files: JSON with polynomials written as strings.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::arrange::Arrangement;
use crate::error::{Error, Result};
use crate::logmod::SubspaceData;
use crate::poly::{parse_polynomial, MonomialOrder, PolyRing, Polynomial, Ring};
use crate::products::{product_subspace, ring_join, singular_subspace, star_subspace, thom_sebastiani_sum, JoinedRing};

const KINDS: [&str; 5] = ["ideal", "arrangement", "product", "star", "thom_sebastiani"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub lex: bool,
}

impl RingSpec {
    pub fn ring(&self) -> Result<Ring> {
        let order = if self.lex { MonomialOrder::Lex } else { MonomialOrder::DegRevLex };
        PolyRing::with_order(&self.variables, &self.weights, order)
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("variables".into(), json!(self.variables));
        m.insert("weights".into(), json!(self.weights));
        if self.lex {
            m.insert("order".into(), json!("lex"));
        }
        Value::Object(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locus {
    Hypersurface,
    Singular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub ring: RingSpec,
    pub f: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Ideal {
        ring: RingSpec,
        ideal: Vec<String>,
        codim: Option<usize>,
    },
    Arrangement {
        ring: RingSpec,
        components: Vec<Vec<String>>,
    },
    Product(Box<Problem>, Box<Problem>),
    Star(Box<Problem>, Box<Problem>),
    ThomSebastiani {
        left: Summand,
        right: Summand,
        locus: Locus,
    },
}

/// A validated problem. Polynomials are kept as written so that exports
/// reproduce the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub kind: Kind,
    pub ci: Option<Vec<String>>,
    pub seed: u64,
}

pub fn load_problem(path: &Path) -> Result<Problem> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_problem(&text)
}

pub fn parse_problem(text: &str) -> Result<Problem> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::schema("", format!("invalid JSON: {e}")))?;
    from_value(&v)
}

pub fn from_value(v: &Value) -> Result<Problem> {
    problem_at(v, "", true)
}

/// Identifiers in order of first appearance.
pub(crate) fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let b = text.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_' || b[i] == b'.') {
                i += 1;
            }
            let id = &text[start..i];
            if !out.iter().any(|s| s == id) {
                out.push(id.to_string());
            }
        } else if c.is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    out
}

/// Replaces whole identifiers according to `f`.
pub(crate) fn rename_identifiers(text: &str, f: impl Fn(&str) -> String) -> String {
    let mut out = String::with_capacity(text.len());
    let b = text.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_' || b[i] == b'.') {
                i += 1;
            }
            out.push_str(&f(&text[start..i]));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push_str(&text[start..i]);
        } else {
            out.push(c as char);
            i += 1;
        }
    }
    out
}

fn object<'a>(v: &'a Value, ptr: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::schema(ptr, "expected an object"))
}

fn string_at(v: &Value, ptr: &str) -> Result<String> {
    v.as_str()
        .map(|s| s.trim().to_string())
        .ok_or_else(|| Error::schema(ptr, "expected a string"))
}

fn strings_at(v: &Value, ptr: &str) -> Result<Vec<String>> {
    let arr = v.as_array().ok_or_else(|| Error::schema(ptr, "expected an array of strings"))?;
    arr.iter()
        .enumerate()
        .map(|(i, s)| string_at(s, &format!("{ptr}/{i}")))
        .collect()
}

fn uint_at(v: &Value, ptr: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::schema(ptr, "expected a non-negative integer"))
}

fn check_keys(m: &Map<String, Value>, ptr: &str, allowed: &[&str]) -> Result<()> {
    for k in m.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(Error::schema(format!("{ptr}/{k}"), format!("unknown key `{k}`")));
        }
    }
    Ok(())
}

fn ring_at(m: &Map<String, Value>, ptr: &str, texts: &[&String]) -> Result<RingSpec> {
    let Some(v) = m.get("ring") else {
        let mut variables: Vec<String> = Vec::new();
        for t in texts {
            for id in identifiers(t) {
                if !variables.contains(&id) {
                    variables.push(id);
                }
            }
        }
        if variables.is_empty() {
            return Err(Error::schema(format!("{ptr}/ring"), "no variables given and none appear"));
        }
        let weights = vec![1; variables.len()];
        return Ok(RingSpec { variables, weights, lex: false });
    };
    let p = format!("{ptr}/ring");
    let r = object(v, &p)?;
    check_keys(r, &p, &["variables", "weights", "order"])?;
    let variables = strings_at(
        r.get("variables").ok_or_else(|| Error::schema(&p, "missing `variables`"))?,
        &format!("{p}/variables"),
    )?;
    let weights = match r.get("weights") {
        None => vec![1; variables.len()],
        Some(w) => {
            let wp = format!("{p}/weights");
            let arr = w.as_array().ok_or_else(|| Error::schema(&wp, "expected an array of positive integers"))?;
            let ws = arr
                .iter()
                .enumerate()
                .map(|(i, x)| match x.as_u64() {
                    Some(n) if n >= 1 && n <= u32::MAX as u64 => Ok(n as u32),
                    _ => Err(Error::schema(format!("{wp}/{i}"), "expected a positive integer")),
                })
                .collect::<Result<Vec<_>>>()?;
            if ws.len() != variables.len() {
                return Err(Error::schema(wp, format!("{} weights for {} variables", ws.len(), variables.len())));
            }
            ws
        }
    };
    let lex = match r.get("order").map(|o| o.as_str()) {
        None | Some(Some("degrevlex")) => false,
        Some(Some("lex")) => true,
        _ => return Err(Error::schema(format!("{p}/order"), "expected `degrevlex` or `lex`")),
    };
    let spec = RingSpec { variables, weights, lex };
    spec.ring().map_err(|e| Error::schema(&p, e.to_string()))?;
    Ok(spec)
}

fn check_polys(ring: &RingSpec, texts: &[String], ptr: &str) -> Result<()> {
    let r = ring.ring()?;
    for (i, t) in texts.iter().enumerate() {
        parse_polynomial(t, &r).map_err(|e| Error::schema(format!("{ptr}/{i}"), e.to_string()))?;
    }
    Ok(())
}

fn summand_at(v: &Value, ptr: &str) -> Result<Summand> {
    let m = object(v, ptr)?;
    check_keys(m, ptr, &["ring", "f"])?;
    let f = string_at(m.get("f").ok_or_else(|| Error::schema(ptr, "missing `f`"))?, &format!("{ptr}/f"))?;
    let ring = ring_at(m, ptr, &[&f])?;
    parse_polynomial(&f, &ring.ring()?).map_err(|e| Error::schema(format!("{ptr}/f"), e.to_string()))?;
    Ok(Summand { ring, f })
}

fn problem_at(v: &Value, ptr: &str, top: bool) -> Result<Problem> {
    let m = object(v, ptr)?;
    let kinds: Vec<&str> = KINDS.iter().copied().filter(|k| m.contains_key(*k)).collect();
    match kinds.len() {
        0 => return Err(Error::schema(ptr, format!("missing problem kind: one of {}", KINDS.join(", ")))),
        1 => {}
        _ => {
            return Err(Error::schema(
                format!("{ptr}/{}", kinds[1]),
                format!("conflicting problem kinds `{}` and `{}`", kinds[0], kinds[1]),
            ))
        }
    }
    let kind_name = kinds[0];
    let seed = match m.get("seed") {
        Some(s) if top => uint_at(s, &format!("{ptr}/seed"))?,
        Some(_) => return Err(Error::schema(format!("{ptr}/seed"), "a seed is only allowed at the top level")),
        None => 0,
    };
    let kp = format!("{ptr}/{kind_name}");
    let kv = &m[kind_name];
    let ci = match m.get("ci") {
        None => None,
        Some(c) => {
            if matches!(kind_name, "product" | "star") {
                return Err(Error::schema(format!("{ptr}/ci"), "give equations on the factors instead"));
            }
            Some(strings_at(c, &format!("{ptr}/ci"))?)
        }
    };
    let kind = match kind_name {
        "ideal" => {
            check_keys(m, ptr, &["ring", "ideal", "codim", "ci", "seed"])?;
            let ideal = strings_at(kv, &kp)?;
            let texts: Vec<&String> = ideal.iter().chain(ci.iter().flatten()).collect();
            let ring = ring_at(m, ptr, &texts)?;
            check_polys(&ring, &ideal, &kp)?;
            let codim = match m.get("codim") {
                None => None,
                Some(c) => {
                    let cp = format!("{ptr}/codim");
                    let c = uint_at(c, &cp)? as usize;
                    if c > ring.variables.len() {
                        return Err(Error::schema(cp, format!("codim {c} exceeds {} variables", ring.variables.len())));
                    }
                    Some(c)
                }
            };
            Kind::Ideal { ring, ideal, codim }
        }
        "arrangement" => {
            check_keys(m, ptr, &["ring", "arrangement", "ci", "seed"])?;
            let arr = kv.as_array().ok_or_else(|| Error::schema(&kp, "expected an array of components"))?;
            if arr.is_empty() {
                return Err(Error::schema(&kp, "an arrangement needs at least one component"));
            }
            let components = arr
                .iter()
                .enumerate()
                .map(|(i, c)| strings_at(c, &format!("{kp}/{i}")))
                .collect::<Result<Vec<_>>>()?;
            let texts: Vec<&String> = components.iter().flatten().chain(ci.iter().flatten()).collect();
            let ring = ring_at(m, ptr, &texts)?;
            for (i, c) in components.iter().enumerate() {
                check_polys(&ring, c, &format!("{kp}/{i}"))?;
            }
            Kind::Arrangement { ring, components }
        }
        "product" | "star" => {
            check_keys(m, ptr, &[kind_name, "seed"])?;
            let pm = object(kv, &kp)?;
            check_keys(pm, &kp, &["left", "right"])?;
            let side = |s: &str| -> Result<Box<Problem>> {
                let sp = format!("{kp}/{s}");
                let sv = pm.get(s).ok_or_else(|| Error::schema(&kp, format!("missing `{s}`")))?;
                Ok(Box::new(problem_at(sv, &sp, false)?))
            };
            let (l, r) = (side("left")?, side("right")?);
            if kind_name == "product" {
                Kind::Product(l, r)
            } else {
                Kind::Star(l, r)
            }
        }
        _ => {
            check_keys(m, ptr, &["thom_sebastiani", "ci", "seed"])?;
            let tm = object(kv, &kp)?;
            check_keys(tm, &kp, &["left", "right", "locus"])?;
            let side = |s: &str| -> Result<Summand> {
                let sv = tm.get(s).ok_or_else(|| Error::schema(&kp, format!("missing `{s}`")))?;
                summand_at(sv, &format!("{kp}/{s}"))
            };
            let locus = match tm.get("locus").map(|l| l.as_str()) {
                None | Some(Some("hypersurface")) => Locus::Hypersurface,
                Some(Some("singular")) => Locus::Singular,
                _ => return Err(Error::schema(format!("{kp}/locus"), "expected `hypersurface` or `singular`")),
            };
            Kind::ThomSebastiani {
                left: side("left")?,
                right: side("right")?,
                locus,
            }
        }
    };
    let problem = Problem { kind, ci, seed };
    if let Some(ci) = &problem.ci {
        let ring = problem.ring()?;
        for (i, t) in ci.iter().enumerate() {
            parse_polynomial(t, &ring).map_err(|e| Error::schema(format!("{ptr}/ci/{i}"), e.to_string()))?;
        }
    }
    Ok(problem)
}

impl Problem {
    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            Kind::Ideal { .. } => "ideal",
            Kind::Arrangement { .. } => "arrangement",
            Kind::Product(..) => "product",
            Kind::Star(..) => "star",
            Kind::ThomSebastiani { .. } => "thom_sebastiani",
        }
    }

    /// The ambient ring of the subspace the problem describes.
    pub fn ring(&self) -> Result<Ring> {
        match &self.kind {
            Kind::Ideal { ring, .. } | Kind::Arrangement { ring, .. } => ring.ring(),
            Kind::Product(l, r) | Kind::Star(l, r) => Ok(ring_join(&l.ring()?, &r.ring()?)?.joined),
            Kind::ThomSebastiani { left, right, .. } => Ok(ring_join(&left.ring.ring()?, &right.ring.ring()?)?.joined),
        }
    }

    pub fn factors(&self) -> Option<(&Problem, &Problem)> {
        match &self.kind {
            Kind::Product(l, r) | Kind::Star(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn arrangement(&self) -> Result<Option<Arrangement>> {
        match &self.kind {
            Kind::Arrangement { ring, components } => {
                let r = ring.ring()?;
                let comps = components
                    .iter()
                    .map(|c| c.iter().map(|t| parse_polynomial(t, &r)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(Some(Arrangement::new(&r, comps)?))
            }
            _ => Ok(None),
        }
    }

    /// The subspace, with `ci_override` (in the ambient ring) replacing any
    /// equations given in the file.
    pub fn subspace(&self, ci_override: Option<&[String]>) -> Result<SubspaceData> {
        let x = match &self.kind {
            Kind::Ideal { ring, ideal, codim } => {
                let r = ring.ring()?;
                let gens = ideal.iter().map(|t| parse_polynomial(t, &r)).collect::<Result<Vec<_>>>()?;
                let codim = match codim {
                    Some(c) => *c,
                    None => {
                        let dim = crate::groebner::Ideal::new(&r, gens.clone())?.krull_dimension();
                        if dim < 0 {
                            return Err(Error::hypothesis("the ideal is the unit ideal"));
                        }
                        r.nvars() - dim as usize
                    }
                };
                SubspaceData::new(&r, gens, codim, None)?
            }
            Kind::Arrangement { .. } => self.arrangement()?.expect("arrangement kind").subspace_data()?,
            Kind::Product(..) => {
                let (x1, x2, jr) = self.factor_data()?.expect("product kind");
                product_subspace(&x1, &x2, &jr)?
            }
            Kind::Star(..) => {
                let (x1, x2, jr) = self.factor_data()?.expect("star kind");
                star_subspace(&x1, &x2, &jr)?
            }
            Kind::ThomSebastiani { left, right, locus } => {
                let (rl, rr) = (left.ring.ring()?, right.ring.ring()?);
                let jr = ring_join(&rl, &rr)?;
                let f = parse_polynomial(&left.f, &rl)?;
                let g = parse_polynomial(&right.f, &rr)?;
                let x = thom_sebastiani_sum(&f, &g, &jr)?;
                match locus {
                    Locus::Hypersurface => x,
                    Locus::Singular => singular_subspace(&x.ideal.gens()[0])?,
                }
            }
        };
        let ci = ci_override.map(|c| c.to_vec()).or_else(|| self.ci.clone());
        match ci {
            Some(c) => {
                let ring = x.ring.clone();
                let f = c.iter().map(|t| parse_polynomial(t, &ring)).collect::<Result<Vec<_>>>()?;
                x.with_ci(f)
            }
            None => Ok(x),
        }
    }

    /// Subspaces of both factors and the joined ring, for products and stars.
    pub fn factor_data(&self) -> Result<Option<(SubspaceData, SubspaceData, JoinedRing)>> {
        let Some((l, r)) = self.factors() else {
            return Ok(None);
        };
        let (x1, x2) = (l.subspace(None)?, r.subspace(None)?);
        let jr = ring_join(&x1.ring, &x2.ring)?;
        Ok(Some((x1, x2, jr)))
    }

    /// Canonical JSON: rings explicit, polynomials as written.
    pub fn to_value(&self) -> Value {
        let mut m = self.body();
        if self.seed != 0 {
            m.insert("seed".into(), json!(self.seed));
        }
        Value::Object(m)
    }

    fn body(&self) -> Map<String, Value> {
        let mut m = Map::new();
        match &self.kind {
            Kind::Ideal { ring, ideal, codim } => {
                m.insert("ring".into(), ring.to_value());
                m.insert("ideal".into(), json!(ideal));
                if let Some(c) = codim {
                    m.insert("codim".into(), json!(c));
                }
            }
            Kind::Arrangement { ring, components } => {
                m.insert("ring".into(), ring.to_value());
                m.insert("arrangement".into(), json!(components));
            }
            Kind::Product(l, r) | Kind::Star(l, r) => {
                let key = self.kind_name();
                m.insert(key.into(), json!({"left": l.to_value(), "right": r.to_value()}));
            }
            Kind::ThomSebastiani { left, right, locus } => {
                let side = |s: &Summand| json!({"ring": s.ring.to_value(), "f": s.f});
                let mut t = Map::new();
                t.insert("left".into(), side(left));
                t.insert("right".into(), side(right));
                if *locus == Locus::Singular {
                    t.insert("locus".into(), json!("singular"));
                }
                m.insert("thom_sebastiani".into(), Value::Object(t));
            }
        }
        if let Some(ci) = &self.ci {
            m.insert("ci".into(), json!(ci));
        }
        m
    }
}

/// Polynomials of a subspace printed for reports.
pub(crate) fn print_all(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}
