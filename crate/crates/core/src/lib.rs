//! Exact computations for the q-analog of the Gaussian unitary ensemble.
//!
//! * [`exactq`]: the field Q(q), q-integers, Gaussian binomials.
//! * [`qxpoly`]: polynomials in `x` over Q(q), q-Hermite and shadow Hermite
//!   polynomials, and the q-Gaussian functional `L`.
//! * [`symschur`]: partitions, Schur polynomials, determinantal families and
//!   the brute-force multivariate functionals.
//! * [`qgue`]: q-GUE integrals, closed-form moment evaluators and the
//!   verification harness.

pub mod error;
pub mod exactq;
pub mod par;
pub mod qgue;
pub mod qxpoly;
pub mod symschur;

pub use error::{Error, Result};
pub use exactq::{BigRat, QPolynomial, Scalar};
