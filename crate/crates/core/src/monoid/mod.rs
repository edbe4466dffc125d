//! Semigroup-level structures: affine and numerical semigroups, block
//! monoids, factorization fibers, Apéry sets, ∇-graphs and R-classes,
//! Betti elements, minimal presentations and principal-ideal minimal
//! factorizations.

mod affine;
mod block;
mod ideal;
mod numerical;
mod presentation;

use std::fmt;

use num_bigint::BigInt;

use crate::kernel::IntVector;

pub use affine::{AffineSemigroup, SemigroupDefinition};
pub use block::{block_monoid, davenport_constant};
pub use numerical::NumericalSemigroup;
pub use presentation::nabla_components;

/// A factorization of a monoid element: a nonnegative exponent vector over
/// the ordered atom list, so that `Σ x_i m_i` recovers the element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization(IntVector);

impl Factorization {
    pub fn new(exponents: IntVector) -> Self {
        Factorization(exponents)
    }

    pub fn exponents(&self) -> &IntVector {
        &self.0
    }

    pub fn into_exponents(self) -> IntVector {
        self.0
    }

    /// The length `|x| = Σ x_i`.
    pub fn length(&self) -> BigInt {
        self.0.norm1()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An ordered pair of factorizations of the same element: a relation in
/// the kernel congruence of the factorization morphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PresentationPair {
    pub lhs: Factorization,
    pub rhs: Factorization,
}

impl PresentationPair {
    pub fn new(lhs: Factorization, rhs: Factorization) -> Self {
        PresentationPair { lhs, rhs }
    }

    /// The same pair with the two sides in lexicographic order, for
    /// orientation-free comparisons.
    pub fn unordered(&self) -> (Factorization, Factorization) {
        if self.lhs <= self.rhs {
            (self.lhs.clone(), self.rhs.clone())
        } else {
            (self.rhs.clone(), self.lhs.clone())
        }
    }
}

impl fmt::Display for PresentationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lhs, self.rhs)
    }
}
