//! The Carlitz module phi_t = tau + t, its torsion polynomials and the torsion algebra.

mod checks;
mod cyclotomic;
mod example;
mod ratfunc;
mod skew;
mod torsion;
mod xpoly;

pub use checks::{
    check_example39, check_galois_action, check_psi_degree, check_psi_primitive, check_torsion_factorization,
    generators, verify_carlitz,
};
pub use cyclotomic::{carlitz_totient, psi_cyclotomic, psi_table, PsiTable};
pub use example::{
    example39_element, partial_fraction_sum, partial_fractions, Example39, Example39Verdicts, PartialFraction,
};
pub use ratfunc::RatFunc;
pub use skew::{carlitz_map, torsion_poly, AddPoly, SkewPoly};
pub use torsion::{galois_act, galois_image, AlgElem, GaloisImage, TensorElem, TorsionAlgebra};
pub use xpoly::XPoly;
