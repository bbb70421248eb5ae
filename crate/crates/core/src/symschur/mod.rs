//! Partitions, Schur polynomials, determinantal families built from monic
//! univariate polynomials, and the brute-force functionals `M^(0)`, `M^(2)`.

mod family;
mod functional;
mod linalg;
mod monomial;
mod partition;

pub use family::{
    alternant, family_expand, family_polynomial, generalized_binomial, hook_decomposition,
    power_sum_schur, schur_coefficient, schur_monomials, sigma_at_zero, BinomialFamily,
    ExplicitFamily, HermiteFamily, Monomials, PolyFamily, SchurVector, ShadowFamily,
};
pub use functional::{
    apply_m0, apply_m2, apply_m2_with, check_oracle_size, MAX_ORACLE_DEGREE, MAX_ORACLE_VARS,
};
pub use linalg::{determinant, permutations};
pub use monomial::{Exponents, MonomialMap};
pub use partition::Partition;
