//! Exact arithmetic in F_p and F_{p^m}.

mod extension;
mod poly;
mod prime;

pub use extension::{
    find_generator, make_extension_field, make_extension_field_with_cap, multiplicative_order,
    power_equation_solvable, solve_power_equation, ExtFieldElement, ExtensionField, DEFAULT_SCAN_CAP,
};
pub use prime::{check_odd_prime, gcd_u128, is_prime, prime_factors, PrimeFieldElement};
pub(crate) use prime::{binomial_mod, inv_mod, mul_mod, reduce_i64};
