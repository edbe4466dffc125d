//! Exact solver for linear Diophantine systems over the nonnegative
//! integers: minimal solutions, Hilbert bases, Graver bases and circuits.
//! Everything above this module is expressed in terms of these calls.

pub mod budget;
mod circuits;
mod graver;
mod solve;
mod system;
mod vector;

pub use circuits::circuits;
pub use graver::graver_basis;
pub use solve::{enumerate_bounded, hilbert_basis, solve_system};
pub use system::{LinearSystem, SolutionSet};
pub use vector::{minimalize, IntVector};
