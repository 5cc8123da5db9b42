//! Lattices in A^n, their invariant factors, and Hecke operators acting on formal lattice sums.

mod checks;
mod enumerate;
mod invariants;
mod lattice;
mod operators;
mod verify;

pub use checks::{
    chain_tag, check_alternating, check_bridge, check_global_counts, check_hecke_mult, check_newton, check_phi_table,
    poly_tag,
};
pub use enumerate::{
    chains_with_product, d_count, for_each_sublattice, local_series_coeff, phi_count, sublattice_enum,
    sublattices_of_type, DivisorLattice, PhiMethod,
};
pub use invariants::{invariants_of, quotient_invariants, smith_diagonal, InvariantType, CHAIN_CONVENTION};
pub use lattice::{hnf_from_generators, hnf_reduce, mat_mul, Lattice, PolyMatrix};
pub use operators::{
    for_each_subspace, gauss_binom, sigma_apply, sigma_lattices, t_chain, t_local, HeckeOp, LatticeSum, ResidueField,
};
pub use verify::{
    alternating_identity, first_sum_difference, global_count_check, hecke_mult_verify, newton_class_targets,
    newton_coefficient, newton_push_size, newton_verify, operators_commute, random_chain, random_coprime_chain,
    random_sublattice, Fault, MultVerdict, MultWitness, NewtonMode, NewtonVerdict, NewtonWitness, NEWTON_PUSH_LIMIT,
};
