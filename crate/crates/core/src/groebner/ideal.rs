use std::fmt;
use std::sync::OnceLock;

use super::{
    hilbert_numerator_of_monomials, krull_dimension_of_monomials, module_intersection, tidy_generators_in,
    GroebnerBasis, HilbertNumerator,
};
use crate::error::{Error, Result};
use crate::poly::{require_homogeneous, FreeModule, FreeModuleElement, Module, Monomial, Polynomial, Ring};

/// A homogeneous ideal with a lazily computed reduced Gröbner basis.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    module: Module,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped; all others must be homogeneous and live in `ring`.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.ring() != ring {
                return Err(Error::mismatch(format!("generator #{i} belongs to another ring")));
            }
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        require_homogeneous(&gens, "ideal generator")?;
        Ok(Ideal {
            ring: ring.clone(),
            module: FreeModule::unshifted(ring, 1),
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, Vec::new()).expect("empty ideal")
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).expect("constants are homogeneous")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn elements(&self) -> Vec<FreeModuleElement> {
        self.gens
            .iter()
            .map(|g| FreeModuleElement::monomial_vector(&self.module, 0, g.clone()))
            .collect()
    }

    fn from_elements(ring: &Ring, elems: &[FreeModuleElement]) -> Self {
        Self::new(ring, elems.iter().map(|e| e.component(0)).collect()).expect("homogeneous by construction")
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| GroebnerBasis::compute_unchecked(&self.module, &self.elements()))
    }

    /// Reduced Gröbner basis as polynomials, ascending leading terms.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.groebner().elements().iter().map(|e| e.component(0)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner().leading_terms().into_iter().map(|(m, _)| m).collect()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        let e = FreeModuleElement::monomial_vector(&self.module, 0, p.clone());
        self.groebner().contains(&e).expect("same module")
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let e = FreeModuleElement::monomial_vector(&self.module, 0, p.clone());
        self.groebner().normal_form(&e).expect("same module").component(0)
    }

    pub fn is_unit(&self) -> bool {
        self.contains(&Polynomial::one(&self.ring))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let elems = module_intersection(&self.elements(), &other.elements())?;
        Ok(Self::from_elements(&self.ring, &elems))
    }

    /// The same ideal presented by a minimal homogeneous generating set.
    pub fn minimalized(&self) -> Ideal {
        let elems = tidy_generators_in(&self.module, &self.elements()).expect("homogeneous");
        Self::from_elements(&self.ring, &elems)
    }

    /// `dim S/I`, −1 for the unit ideal.
    pub fn krull_dimension(&self) -> i64 {
        krull_dimension_of_monomials(&self.leading_monomials(), self.ring.nvars())
    }

    /// Numerator of the Hilbert series of `S/I` over `Π(1 − t^{w_i})`.
    pub fn hilbert_numerator(&self) -> HilbertNumerator {
        hilbert_numerator_of_monomials(&self.leading_monomials(), self.ring.weights())
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::mismatch("ideals over different rings"));
        }
        Ok(())
    }
}

/// `dim S/I` for the ideal spanned by `gens`; shorthand for [`Ideal::krull_dimension`].
pub fn krull_dimension(ideal: &Ideal) -> i64 {
    ideal.krull_dimension()
}

pub fn hilbert_numerator(ideal: &Ideal) -> HilbertNumerator {
    ideal.hilbert_numerator()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_all, PolyRing};

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, parse_all(gens, r).unwrap()).unwrap()
    }

    #[test]
    fn dimension_and_numerator() {
        let r = PolyRing::new(&["x1", "x2", "x3"]).unwrap();
        assert_eq!(ideal(&r, &["x1", "x2"]).krull_dimension(), 1);
        let r2 = PolyRing::new(&["x", "y"]).unwrap();
        assert_eq!(ideal(&r2, &["x*y"]).krull_dimension(), 1);
        assert_eq!(Ideal::unit(&r2).krull_dimension(), -1);
        assert_eq!(Ideal::zero(&r2).hilbert_numerator().coeffs(), &[1]);
        assert_eq!(ideal(&r2, &["x^2"]).hilbert_numerator().coeffs(), &[1, 0, -1]);
        assert_eq!(ideal(&r2, &["x", "y"]).hilbert_numerator().coeffs(), &[1, -2, 1]);
    }

    #[test]
    fn twisted_cubic() {
        let r = PolyRing::new(&["a", "b", "c", "d"]).unwrap();
        let i = ideal(&r, &["b^2 - a*c", "b*c - a*d", "c^2 - b*d"]);
        assert_eq!(i.krull_dimension(), 2);
        // Hilbert polynomial 3d+1: numerator 1 - 3t^2 + 2t^3
        assert_eq!(i.hilbert_numerator().coeffs(), &[1, 0, -3, 2]);
        assert!(i.groebner().satisfies_buchberger_criterion());
    }

    #[test]
    fn products_and_intersections() {
        let r = PolyRing::new(&["x", "y", "u", "v"]).unwrap();
        let a = ideal(&r, &["x", "y"]);
        let b = ideal(&r, &["u", "v"]);
        assert!(a.product(&b).unwrap().equals(&a.intersection(&b).unwrap()));
        assert!(!a.equals(&b));
        assert!(a.sum(&b).unwrap().contains(&parse_all(&["x + u"], &r).unwrap()[0]));
    }
}
