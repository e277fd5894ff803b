//! The étale cover trivializing Syz(u², v², w²)(3): transition and
//! Frobenius matrices on the charts u ≠ 0 and w ≠ 0, the defining relations
//! of the chart algebras and the gluing between them.

mod charts;
mod gluing;
mod relations;
mod shift;

pub use charts::{
    check_change_of_basis, check_h_matrices, check_transition, cocycle_check, cocycle_holds, divide, frobenius_twist,
    h_matrices, transition_matrix, ChartBases, FractionMatrix, FractionTriple,
};
pub use gluing::{
    check_gluing_with, glued_relations, gluing_substitution, gluing_substitution_check, section_ring_difference,
    section_ring_identity_check, times_b, SectionIdentity,
};
pub use relations::{
    build_cover, build_relations, check_relations, constant_matrix, det_periodicity_check, displayed_presentation,
    formal_matrix, frobenius_formal, relation_matrix, relation_matrix_with_det_symbol, restrict_w0, specialize_form,
    specialize_w0, u_clearing, w0_generators, w_clearing, CoverData, FormalMatrix, W0Coefficient, W0Form,
};
pub use shift::{matrix_ideal_shift_check, shift_identities_hold};
