//! Exact noncommutative polynomial engine over `Z[q^{1/2}, q^{-1/2}, c, c^{-1}]`:
//! normal ordering for the q-plane pairs and their double, the quantum
//! Minkowski relations through the triangular decomposition, the matrix
//! coproduct with its Hopf consistency checks, and the pairing with the
//! enveloping side verified against an inductive oracle.

pub mod coeff;
pub mod minkowski;
pub mod pairing;
pub mod poly;

pub use coeff::{QCoeff, QLaurent};
pub use minkowski::{
    coproduct, coproduct_coassociative_on_generators, coproduct_homomorphism_example,
    coproduct_respects_relations, determinant_grouplike, determinant_in_gauss,
    reassociation_agrees, verify_minkowski_relations, z_in_gauss, z_relation_differences,
};
pub use pairing::{
    pairing_inductive_oracle, pairing_monomial, pairing_poly, qfactorial_gb_consistency,
    ORACLE_DEGREE_LIMIT,
};
pub use poly::{normal_order, AlgebraKind, NCPoly, NCTensor, Word};
