//! Univariate polynomials with exact rational coefficients, lowest degree
//! first, trailing zeros trimmed.

use num_traits::Zero;

use crate::rational::{self, one, zero, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `Π (x - r)` over `roots`.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Poly::constant(one()), |acc, &r| {
            acc.mul(&Poly::new(vec![-r, one()]))
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = rational::add(out[i + j], rational::mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, factor: Rational) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .map(|&c| rational::mul(c, factor))
                .collect(),
        )
    }

    pub fn eval(&self, x: Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(zero(), |acc, &c| rational::add(rational::mul(acc, x), c))
    }
}

/// Lagrange basis polynomial `Π_{i≠j} (x - r_i)/(r_j - r_i)`. Roots must be
/// pairwise distinct.
pub fn lagrange_basis(roots: &[Rational], j: usize) -> Poly {
    let others: Vec<Rational> = roots
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(_, &r)| r)
        .collect();
    let denom = others.iter().fold(one(), |acc, &r| {
        rational::mul(acc, rational::sub(roots[j], r))
    });
    Poly::from_roots(&others).scale(rational::div(one(), denom))
}
