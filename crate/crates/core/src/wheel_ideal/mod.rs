//! The wheel-condition ideals `I_m` at a specialization point: exact
//! membership by symbolic substitution, bases inside a box, stability under
//! the algebra, the rewriting upper bound, and the `n = k + 1` quotient.

mod basis;
mod lemmas;
mod linalg;
mod quotient;
mod report;
mod rewrite;
mod substitution;

pub use basis::{
    basis_b_specialized, ideal_in_box, invariance_check, invariance_check_cleared,
    linearly_independent, Violation,
};
pub use lemmas::{
    duality_vanishing_check, equivalent_definitions, key_lemma_check, scattered_one_wheel_examples,
    zeta_count_check,
};
pub use linalg::{coefficient_rows, kernel, rank, rref, spec_poly_rank, spec_rank};
pub use quotient::quotient_nk1_check;
pub use report::{Check, Counts, Params, Report, Status};
pub use rewrite::{
    limit_ideal_seed, quotient_dimension, relation_for, relation_soundness, rewrite_to_b,
    AppliedRelation, RewriteState,
};
pub use substitution::{
    ideal_witness, in_ideal, in_ideal_with, multi_substitutions, restrict, substitute_monomial,
    wheel_substitutions, wheel_vanishes, Direction, WheelSubstitution, Witness,
};
