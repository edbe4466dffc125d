//! Arithmetic invariants of nonunique factorization: lengths and Delta
//! sets, elasticity, distances and the catenary degree family, tame
//! degree, ω-primality and denumerants. All values are exact.

mod catenary;
mod denumerant;
mod distance;
mod lengths;
mod omega;
mod report;
mod tame;

pub use catenary::{
    monotone_catenary_numerical,
    adjacent_catenary_element, catenary, catenary_element, catenary_numerical,
    catenary_values_half_factorial, catenary_with_witness, equal_catenary,
    equal_catenary_element, homogeneous_catenary, monotone_catenary,
    monotone_catenary_with_witness,
};
pub use denumerant::{
    denumerant, denumerant_numerical, max_denumerant, max_denumerant_element, MaxDenumerant,
};
pub use distance::{catenary_of_factorizations, distance};
pub use lengths::{
    delta_max_numerical, delta_min_numerical,
    delta_element, delta_max, delta_min, delta_set_numerical, elasticity, elasticity_element,
    is_half_factorial, length_set, length_set_numerical, DeltaScan, LengthSet,
};
pub use omega::{
    omega, omega_element, omega_element_numerical, omega_numerical, omega_with_witness,
};
pub use report::{InvariantReport, ReportValue};
pub use tame::{tame, tame_element, tame_numerical, tame_wrt};
