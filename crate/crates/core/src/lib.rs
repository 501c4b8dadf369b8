//! Exact computations for finite-dimensional Poisson algebras presented as a
//! single nonassociative product satisfying the Markl-Remm identity.
//!
//! Everything is over ℚ with exact arithmetic; equality tests never use a
//! tolerance.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod linalg;
pub mod multilinear;
pub mod rational;

pub use algebra::{
    annihilator, annihilator_with, associator, combine, idempotent_central_check, markl_remm_residual, split, verify,
    verify_algebra, Algebra, Axiom, AxiomReport, PoissonPair, Side, Witness,
};
pub use catalog::{bracket_preset, instantiate, list_entries, EntrySignature, Params};
pub use cohomology::{
    chevalley_delta, cocycle_space, decompose_delta2, delta1_p, delta2_c, delta2_h, delta2_p, hochschild_delta, l1, l2,
    lichnerowicz_delta2, prop3_check, theorem5_check, Decomposition, OperatorKind, Operators, SymmetryFilter,
};
pub use deformation::{
    assoc_first_order_space, dk_residual, extend_jet, is_lie_k_derivation, lie_biderivation_space,
    lie_first_order_space, ph_cochain_space, ph_delta_check, rigidity_probe, verify_jet, CochainSymmetry,
    DeformationKind, Extension, Jet, RigidityReport,
};
pub use error::{Error, Result};
pub use linalg::{intersect, kernel_basis, solve_affine, AffineSolution, Matrix, Subspace, Vector};
pub use multilinear::{
    act, comp, constants, fully_symmetric, is_v_symmetric, sym_skew_parts, Constants, GroupAlgebraElement,
    MultilinearMap, Permutation,
};
pub use rational::Rational;
