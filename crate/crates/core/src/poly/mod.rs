//! Exact rationals, graded polynomial rings, polynomials, and graded free modules.

mod module;
mod parse;
mod polynomial;
mod rational;
mod ring;
pub mod wedge;

pub use module::{combination, FreeModule, FreeModuleElement, Module};
pub use parse::parse_polynomial;
pub use polynomial::{determinant, Polynomial};
pub use rational::{common_denominator, primitive_factor, Q};
pub use ring::{Monomial, MonomialOrder, PolyRing, Ring};
pub use wedge::{binomial, subset_from_index, subset_index};

use crate::error::{Error, Result};

/// Parses each string of `texts` in `ring`.
pub fn parse_all<S: AsRef<str>>(texts: &[S], ring: &Ring) -> Result<Vec<Polynomial>> {
    texts
        .iter()
        .map(|t| parse_polynomial(t.as_ref(), ring))
        .collect()
}

/// Jacobian matrix, one row per polynomial.
pub fn jacobian(polys: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    polys
        .iter()
        .map(|p| {
            (0..p.ring().nvars())
                .map(|i| p.partial_derivative(i).expect("index in range"))
                .collect()
        })
        .collect()
}

/// The k×k minor of `matrix` on the given columns (all rows).
pub fn minor(ring: &Ring, matrix: &[Vec<Polynomial>], cols: &[usize]) -> Polynomial {
    let sub: Vec<Vec<Polynomial>> = matrix
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    determinant(ring, &sub)
}

pub(crate) fn require_homogeneous(polys: &[Polynomial], what: &str) -> Result<()> {
    match polys.iter().position(|p| !p.is_homogeneous()) {
        Some(i) => Err(Error::Inhomogeneous(format!(
            "{what} #{i} `{}` is not weighted-homogeneous",
            polys[i]
        ))),
        None => Ok(()),
    }
}
