use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The reduced denominator vanishes at the requested point.
    #[error("pole at q = {at}: reduced denominator {denominator} vanishes")]
    Pole { at: String, denominator: String },

    #[error("partition {partition} has {length} parts but only {n_vars} variables are available")]
    Shape {
        partition: String,
        length: usize,
        n_vars: usize,
    },

    /// Oracle guardrail: brute-force expansion refused.
    #[error("size guardrail exceeded: {what} = {value} (limit {limit})")]
    Size {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("printed denominator 1 - q^{exponent} vanishes at m = {m}, s = {s}, t = {t}")]
    DegenerateDenominator {
        m: usize,
        s: usize,
        t: usize,
        exponent: i64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
