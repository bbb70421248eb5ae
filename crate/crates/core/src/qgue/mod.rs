//! q-GUE integrals, printed closed forms, and the harness comparing them.
//!
//! The integral is normalized: `∫ f = L^(2)(f) / L^(2)(1)`.

mod closed_form;
mod genus;
mod integrate;
mod report;
mod verify;

pub use closed_form::{
    alternating_binomial_sum, alternating_binomial_sum_printed, hermite_square_normalization,
    hook_moment_closed_form, hook_sigma_from_truncation, p2m_closed_form, qhz_rhs,
    sigma_closed_form, sigma_difference_form, theorem5_printed_normalization, theorem5_rhs,
};
pub use genus::{genus_table, genus_table_with, interpolate, pairing_genus_counts, GenusRow, MAX_GENUS_M};
pub use integrate::{
    hermite_squared, hermite_squared_moment, integrate_polynomial_oracle, integrate_power_sum,
    integrate_power_sum_with, integrate_schur, integrate_schur_with, integrate_symmetric,
    level_density_moment, normalization, normalization_formula, Method, MomentKind, MomentQuery,
};
pub use report::{params, Grid, PointResult, Status, Summary, VerificationReport};
pub use verify::{check_grid, verify_suite, verify_suite_with, Suite, MAX_UNIVARIATE};
