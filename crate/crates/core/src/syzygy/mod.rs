//! Explicit syzygies on the base curve and on the Fermat curve, and the
//! identities relating them.

mod catalog;
mod checks;
mod triple;

pub use catalog::{
    build_catalog, phi_images, phi_map, psi_images, s_generators, s_prime_generators, GeneratorCatalog,
    CATALOG_NAMES,
};
pub use checks::{
    alpha_step, alpha_steps, check_alpha, check_catalog, check_independence, check_kernel_relation,
    check_mutation_sensitivity, combine, psi_kernel_vector, pull_back, rows_independent, sign_flip_mutants,
    AlphaMap, AlphaStep,
};
pub use triple::{check_syzygy, SyzygyTriple};
