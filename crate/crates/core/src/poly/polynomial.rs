use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::rational::Q;
use super::ring::{Monomial, Ring};
use crate::error::{Error, Result};

/// A polynomial in canonical form: nonzero terms, sorted by decreasing monomial.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Q)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Q) -> Self {
        Self::monomial(ring, ring.one_monomial(), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Q::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Q) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, ring.var_monomial(i), Q::one())
    }

    /// Canonicalizes an arbitrary list of terms (merging duplicates, dropping zeros).
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let e = acc.entry(m).or_insert_with(Q::zero);
            *e = &*e + &c;
        }
        let mut terms: Vec<(Monomial, Q)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already sorted decreasingly with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Q)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Q)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Q)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Q)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<&Q> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximal weighted degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.weighted_degree()).max()
    }

    /// Zero is homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self
                .terms
                .iter()
                .all(|(m, _)| m.weighted_degree() == m0.weighted_degree()),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, bound: n });
        }
        let weights = self.ring.weights();
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(i);
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            Some((
                Monomial::from_exponents(&exps, weights),
                c * &Q::from_int(e as i64),
            ))
        });
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Rewrites into `target`, sending variable `i` to variable `map[i]`.
    pub fn map_variables(&self, target: &Ring, map: &[usize]) -> Polynomial {
        debug_assert_eq!(map.len(), self.ring.nvars());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u16; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[map[i]] += e;
            }
            (target.monomial(&exps), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Substitutes `values[i]` for variable `i`; all values must live in one ring.
    pub fn substitute(&self, target: &Ring, values: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &values[i].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Rational content-free integer form, positive leading coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return self.clone();
        }
        let den = super::rational::common_denominator(self.terms.iter().map(|(_, c)| c));
        let scaled: Vec<num_bigint::BigInt> = self
            .terms
            .iter()
            .map(|(_, c)| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = num_bigint::BigInt::zero();
        for v in &scaled {
            g = g.gcd(v);
        }
        if g.is_zero() {
            g = num_bigint::BigInt::one();
        }
        let sign = if self.terms[0].1.is_negative() { -1 } else { 1 };
        let terms = self
            .terms
            .iter()
            .zip(scaled)
            .map(|((m, _), v)| (m.clone(), Q::from(v / &g * sign)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        debug_assert_eq!(self.ring.nvars(), other.ring.nvars());
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| {
            (m.clone(), if negate { -c } else { c.clone() })
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, Q> = HashMap::with_capacity(self.len() * rhs.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let e = acc.entry(m1.mul(m2)).or_insert_with(Q::zero);
                *e = &*e + &(c1 * c2);
            }
        }
        Polynomial::from_terms(&self.ring, acc)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Determinant by fraction-free cofactor expansion; fine for the k <= 6 minors used here.
pub fn determinant(ring: &Ring, m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    match k {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Polynomial::zero(ring);
            for col in 0..k {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &determinant(ring, &minor);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    #[test]
    fn derivatives() {
        let r = PolyRing::new(&["x", "y", "z"]).unwrap();
        let p = |s: &str| crate::poly::parse_polynomial(s, &r).unwrap();
        assert_eq!(p("x^2*y").partial_derivative(0).unwrap(), p("2*x*y"));
        assert_eq!(p("x^2").partial_derivative(1).unwrap(), p("0"));
        assert_eq!(p("x^2 - y^2*z").partial_derivative(0).unwrap(), p("2*x"));
        assert!(matches!(
            p("x").partial_derivative(3),
            Err(Error::IndexOutOfRange { index: 3, bound: 3 })
        ));
    }

    #[test]
    fn determinant_3x3() {
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let p = |s: &str| crate::poly::parse_polynomial(s, &r).unwrap();
        let m = vec![
            vec![p("x"), p("1"), p("0")],
            vec![p("0"), p("y"), p("1")],
            vec![p("1"), p("0"), p("x")],
        ];
        assert_eq!(determinant(&r, &m), p("x^2*y + 1"));
    }

    #[test]
    fn primitive_part_clears_denominators() {
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let p = crate::poly::parse_polynomial("-1/2*x + 3/4*y", &r).unwrap();
        assert_eq!(p.primitive_part().to_string(), "2*x - 3*y");
    }
}
