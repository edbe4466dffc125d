//! Factorization invariants of finitely generated commutative, cancellative,
//! reduced monoids: affine semigroups, numerical semigroups and block
//! monoids.
//!
//! Factorizations of an element are the nonnegative integer solutions of a
//! linear system whose columns are the generators, so everything here rests
//! on an exact integer Diophantine kernel ([`kernel`]): minimal solutions,
//! Hilbert bases, Graver bases and circuits. On top of it sit semigroup
//! structures ([`monoid`]: Apéry sets, Betti elements, minimal
//! presentations, block monoids) and the arithmetic invariants themselves
//! ([`invariants`]: elasticity, Delta sets, the catenary degree family,
//! tame degree, ω-primality, denumerants).
//!
//! All arithmetic is arbitrary precision; results are exact integers,
//! rationals or integer sets, and every returned set is sorted so repeated
//! runs produce identical output.

pub mod error;
pub mod invariants;
pub mod kernel;
pub mod monoid;

pub use error::{Error, Result};
