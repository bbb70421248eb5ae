//! Exact arithmetic in Q(q) and the q-combinatorial building blocks.

mod modgcd;
mod qcomb;
mod qpoly;
mod scalar;

pub use qcomb::{m_q, q_binomial, q_factorial, q_integer, series_coefficient, Base, Series};
pub use qpoly::{BigRat, QPolynomial};
pub use scalar::Scalar;

/// Parses an integer or `a/b` rational.
pub fn parse_rat(s: &str) -> Option<BigRat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a = a.trim().parse().ok()?;
            let b: num_bigint::BigInt = b.trim().parse().ok()?;
            (b != 0.into()).then(|| BigRat::new(a, b))
        }
        None => Some(BigRat::from_integer(s.parse().ok()?)),
    }
}
